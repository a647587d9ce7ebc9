//! Aggregated verification: scripts, variety comparisons, witness points,
//! cocycle identities and deformation hypotheses, with machine- and
//! human-readable renderings that agree on verdicts.

use crate::deform::{
    canonical_deformation, check_hypotheses, derivation, direction_is_vergne_cocycle,
    verify_linear_deformation, DerivationSpec,
};
use crate::exactalg::Rational;
use crate::isokit::{builtin_scripts, run_script, VerificationReport};
use crate::liecore::{cocycle_defect, is_filiform, jacobiator, SubspaceSplit};
use crate::variety::{compare_relations, example_points, membership};
use crate::vergne::{delta_set, generic_filiform, mu0, psi, specialize};
use serde::Serialize;

/// One verification check with its verdict.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub kind: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySummary {
    pub tool: String,
    pub version: String,
    pub target: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

pub fn tool_version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

/// Run one named built-in script (all instantiated dimensions).
pub fn verify_scripts(name_filter: Option<&str>) -> (Vec<Check>, Vec<VerificationReport>) {
    let mut checks = Vec::new();
    let mut reports = Vec::new();
    for script in builtin_scripts() {
        if let Some(filter) = name_filter {
            if script.name != filter {
                continue;
            }
        }
        let report = run_script(&script);
        checks.push(Check {
            name: format!("script/{}@{}", report.script, report.dim),
            kind: "script".into(),
            passed: report.passed,
            detail: if report.passed {
                format!(
                    "{} steps, concluded [{}]",
                    report.steps.len(),
                    report.concluded.join(", ")
                )
            } else {
                report
                    .steps
                    .iter()
                    .rev()
                    .find(|s| !s.ok)
                    .map(|s| format!("step {}: {}", s.index, s.detail))
                    .unwrap_or_else(|| "failed".into())
            },
        });
        reports.push(report);
    }
    (checks, reports)
}

/// Two-way span comparison of derived vs published variety equations.
pub fn verify_variety() -> Vec<Check> {
    let mut checks = Vec::new();
    for n in [8usize, 9, 10, 11] {
        let report = compare_relations(n).expect("supported dimension");
        let residues = report.residues().len();
        checks.push(Check {
            name: format!("variety/compare@{n}"),
            kind: "variety".into(),
            passed: residues == 0,
            detail: if residues == 0 {
                format!(
                    "two-way span match ({} derived, {} published)",
                    report.derived_in_published.len(),
                    report.published_in_derived.len()
                )
            } else {
                format!("{residues} residue(s) flagged")
            },
        });
    }
    checks
}

/// The six witness points against their claimed memberships.
pub fn verify_points() -> Vec<Check> {
    let mut checks = Vec::new();
    for (idx, ex) in example_points().iter().enumerate() {
        let report = membership(&ex.point).expect("supported dimension");
        let comp_ok = match &ex.component {
            None => report.in_variety,
            Some(c) => report.component(c).map(|m| m.member).unwrap_or(false),
        };
        let open_ok = report
            .open_set(&ex.open_set)
            .map(|m| m.member)
            .unwrap_or(false);
        let variety_ok = report.in_variety;
        let passed = comp_ok && open_ok && variety_ok;
        let mut bad: Vec<String> = Vec::new();
        if !passed {
            for (label, v) in &report.equation_values {
                if !v.is_zero() {
                    bad.push(format!("{label} = {v}"));
                }
            }
            if let Some(c) = ex.component.as_ref().and_then(|c| report.component(c)) {
                for (label, v) in &c.values {
                    if !v.is_zero() {
                        bad.push(format!("{label} = {v}"));
                    }
                }
            }
            bad.dedup();
        }
        checks.push(Check {
            name: format!(
                "point/{}@{}{}",
                idx + 1,
                ex.point.n,
                ex.component
                    .as_ref()
                    .map(|c| format!("/{c}"))
                    .unwrap_or_default()
            ),
            kind: "point".into(),
            passed,
            detail: if passed {
                format!("claims hold (component + {})", ex.open_set)
            } else {
                format!("claim fails: {}", bad.join("; "))
            },
        });
    }
    checks
}

/// Cocycle identities of the Vergne basis for dimensions 6..13.
pub fn verify_cocycles() -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 6..=13 {
        let base = mu0(n);
        let mut all_zero = true;
        let mut count = 0usize;
        for (r, s) in delta_set(n) {
            let cocycle = psi(n, r, s).expect("delta index");
            if !cocycle_defect(&base, &cocycle).expect("same dim").is_zero() {
                all_zero = false;
            }
            count += 1;
        }
        let cross = crate::variety::jacobi_cross_terms(n).is_zero();
        checks.push(Check {
            name: format!("cocycle/basis@{n}"),
            kind: "cocycle".into(),
            passed: all_zero && cross,
            detail: format!(
                "{count} basis cocycles checked; jacobiator(mu0+psi) = psi o psi: {cross}"
            ),
        });
    }
    checks
}

/// Deformation hypotheses and linearity, symbolically.
pub fn verify_deformations() -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 6..=13 {
        let model = generic_filiform(n);
        let split = SubspaceSplit::standard(n);
        let d3 = derivation(&DerivationSpec::D3 { n }).expect("valid");
        let ok3 = check_hypotheses(&model.mu, &split, &d3).all_pass()
            && direction_is_vergne_cocycle(n, &DerivationSpec::D3 { n }).unwrap_or(false);
        let mut detail = format!("D3 hypotheses + direction identity: {ok3}");
        let mut passed = ok3;
        if n % 2 == 1 && n >= 7 {
            let d4 = derivation(&DerivationSpec::D4 { n }).expect("valid");
            let ok4 = check_hypotheses(&model.mu, &split, &d4).all_pass()
                && direction_is_vergne_cocycle(n, &DerivationSpec::D4 { n }).unwrap_or(false);
            detail.push_str(&format!("; D4: {ok4}"));
            passed = passed && ok4;
        }
        checks.push(Check {
            name: format!("deform/hypotheses@{n}"),
            kind: "deform".into(),
            passed,
            detail,
        });
    }
    for n in [9usize, 10, 11] {
        let model = generic_filiform(n);
        let def = canonical_deformation(&model.mu).expect("hypotheses hold");
        let report = verify_linear_deformation(&def);
        checks.push(Check {
            name: format!("deform/linearity@{n}"),
            kind: "deform".into(),
            passed: report.all_pass(),
            detail: "phi o phi = 0, cocycle defect = 0, jacobiator constant in t".into(),
        });
    }
    checks
}

/// Specializations: at every witness point and sample times, the deformed
/// bracket satisfies the Jacobi identity and stays filiform.
pub fn verify_specializations() -> Vec<Check> {
    let mut checks = Vec::new();
    let times: Vec<Rational> = vec![Rational::from(1), Rational::new(1, 2), Rational::from(-3)];
    for (idx, ex) in example_points().iter().enumerate() {
        let n = ex.point.n;
        let model = generic_filiform(n);
        let mu = specialize(&model, &ex.point).expect("matching dims");
        let def = canonical_deformation(&mu).expect("hypotheses hold");
        let mut passed = true;
        let mut notes: Vec<String> = Vec::new();
        for t in &times {
            let mu_t = def.at_time(t);
            let jac = jacobiator(&mu_t);
            if !jac.is_zero() {
                passed = false;
                notes.push(format!("jacobiator(mu_t) != 0 at t = {t}"));
                continue;
            }
            match is_filiform(&mu_t) {
                Ok(true) => {}
                _ => {
                    passed = false;
                    notes.push(format!("mu_t not filiform at t = {t}"));
                }
            }
        }
        checks.push(Check {
            name: format!("specialize/point{}@{}", idx + 1, n),
            kind: "specialize".into(),
            passed,
            detail: if passed {
                "t in {1, 1/2, -3}: Jacobi + filiform hold".to_string()
            } else {
                notes.join("; ")
            },
        });
    }
    checks
}

/// All checks, optionally in parallel. The output ordering is canonical
/// regardless of scheduling.
pub fn verify_all(jobs: usize) -> VerifySummary {
    let mut checks: Vec<Check> = Vec::new();
    if jobs > 1 {
        let tasks: Vec<fn() -> Vec<Check>> = vec![
            || verify_scripts(None).0,
            verify_variety,
            verify_points,
            verify_cocycles,
            verify_deformations,
            verify_specializations,
        ];
        let results: Vec<Vec<Check>> = std::thread::scope(|scope| {
            let handles: Vec<_> = tasks.into_iter().map(|task| scope.spawn(task)).collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("verification thread"))
                .collect()
        });
        for r in results {
            checks.extend(r);
        }
    } else {
        checks.extend(verify_scripts(None).0);
        checks.extend(verify_variety());
        checks.extend(verify_points());
        checks.extend(verify_cocycles());
        checks.extend(verify_deformations());
        checks.extend(verify_specializations());
    }
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let passed = checks.iter().all(|c| c.passed);
    VerifySummary {
        tool: "filiform".into(),
        version: tool_version(),
        target: "all".into(),
        passed,
        checks,
    }
}

/// 64-bit FNV-1a digest of input bytes, for audit trails in reports.
pub fn digest(bytes: &[u8]) -> String {
    let mut hash: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    format!("fnv1a:{hash:016x}")
}

/// Deterministic JSON rendering (struct field order, sorted check lists).
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

/// Human-readable rendering of a summary; verdicts match the JSON.
pub fn render_text(summary: &VerifySummary, elapsed_ms: Option<u128>) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "filiform {} verify {}\n",
        summary.version, summary.target
    ));
    for check in &summary.checks {
        out.push_str(&format!(
            "  [{}] {:40} {}\n",
            if check.passed { "PASS" } else { "FAIL" },
            check.name,
            check.detail
        ));
    }
    let failed = summary.checks.iter().filter(|c| !c.passed).count();
    out.push_str(&format!(
        "{} checks, {} failed{}\n",
        summary.checks.len(),
        failed,
        elapsed_ms
            .map(|ms| format!(", {ms} ms"))
            .unwrap_or_default()
    ));
    out
}

/// Evaluate `verify` for one named target.
pub fn verify_target(target: &str, jobs: usize) -> Option<VerifySummary> {
    let checks = match target {
        "all" => return Some(verify_all(jobs)),
        "points" => verify_points(),
        "variety" => verify_variety(),
        "cocycles" => verify_cocycles(),
        "deformations" => verify_deformations(),
        "specializations" => verify_specializations(),
        name => {
            if !crate::isokit::script_names().contains(&name) {
                return None;
            }
            verify_scripts(Some(name)).0
        }
    };
    if checks.is_empty() {
        return None;
    }
    let passed = checks.iter().all(|c| c.passed);
    Some(VerifySummary {
        tool: "filiform".into(),
        version: tool_version(),
        target: target.to_string(),
        passed,
        checks,
    })
}

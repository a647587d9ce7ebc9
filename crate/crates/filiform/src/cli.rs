//! Command-line front end.
//!
//! Subcommands: `variety`, `check-point`, `deform`, `iso-eqs`, `verify`,
//! `export`. All file I/O is UTF-8 JSON with the schemas defined by the
//! library types. Exit codes: 0 all requested checks pass, 2 a mathematical
//! check failed, 1 usage or I/O error.

use crate::deform::canonical_deformation;
use crate::exactalg::{Polynomial, Rational, VarId};
use crate::isokit::{builtin_scripts, export_equations, Stage};
use crate::liecore::BilinearMap;
use crate::report::{self, digest, render_text, to_json};
use crate::variety::{compare_relations, jacobi_relations, known_relations};
use crate::vergne::{generic_filiform, specialize, FiliformPoint};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

const USAGE: &str = "\
usage: filiform <command> [options]

commands:
  variety <n> [--format json|text|latex]
      derived vs published equations of the variety of dimension n
  check-point <file>
      membership report for a point file {n, values, claims?}
  deform --n <n> [--point FILE] [--t RATIONAL]
      canonical linear deformation, as a bracket in JSON
  iso-eqs --n <n> --stage <raw|post-m12|post-diagonal|prop-g> [--format json|text]
      full isomorphism-defect equation listing
  verify <script-name|all|points|variety|cocycles|deformations|specializations>
         [--jobs N] [--format json|text]
      replay certified checks; exit 0 only if everything passes
  export --what <equations|brackets|scripts> [--n N] [--stage S]
         --format <json|latex|text>
      deterministic document export
";

#[derive(Serialize, Deserialize)]
struct PointClaims {
    #[serde(skip_serializing_if = "Option::is_none")]
    component: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    open_set: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct PointFile {
    n: usize,
    values: Vec<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    claims: Option<PointClaims>,
}

struct Args {
    positional: Vec<String>,
    flags: BTreeMap<String, String>,
}

fn parse_args(argv: &[String]) -> Result<Args, String> {
    let mut positional = Vec::new();
    let mut flags = BTreeMap::new();
    let mut it = argv.iter().peekable();
    while let Some(arg) = it.next() {
        if let Some(name) = arg.strip_prefix("--") {
            let value = it
                .next()
                .ok_or_else(|| format!("flag --{name} needs a value"))?;
            flags.insert(name.to_string(), value.clone());
        } else {
            positional.push(arg.clone());
        }
    }
    Ok(Args { positional, flags })
}

fn eprint_usage(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    eprintln!("{USAGE}");
    1
}

pub fn run(argv: &[String]) -> i32 {
    let args = match parse_args(argv) {
        Ok(a) => a,
        Err(e) => return eprint_usage(&e),
    };
    let Some(command) = args.positional.first().map(String::as_str) else {
        return eprint_usage("missing command");
    };
    match command {
        "variety" => cmd_variety(&args),
        "check-point" => cmd_check_point(&args),
        "deform" => cmd_deform(&args),
        "iso-eqs" => cmd_iso_eqs(&args),
        "verify" => cmd_verify(&args),
        "export" => cmd_export(&args),
        other => eprint_usage(&format!("unknown command `{other}`")),
    }
}

fn parse_n(args: &Args, positional_idx: usize) -> Result<usize, String> {
    if let Some(v) = args.flags.get("n") {
        return v.parse().map_err(|_| format!("bad dimension `{v}`"));
    }
    args.positional
        .get(positional_idx)
        .ok_or_else(|| "missing dimension".to_string())?
        .parse()
        .map_err(|e| format!("bad dimension: {e}"))
}

#[derive(Serialize)]
struct VarietyDoc {
    n: usize,
    derived: Vec<LabeledPoly>,
    published: Vec<LabeledPoly>,
    comparison: crate::variety::ComparisonReport,
}

#[derive(Serialize)]
struct LabeledPoly {
    label: String,
    poly: String,
    latex: String,
}

fn labeled(set: &crate::variety::EquationSet) -> Vec<LabeledPoly> {
    set.equations
        .iter()
        .map(|(label, poly)| LabeledPoly {
            label: label.clone(),
            poly: poly.to_string(),
            latex: poly.latex(),
        })
        .collect()
}

fn cmd_variety(args: &Args) -> i32 {
    let n = match parse_n(args, 1) {
        Ok(n) => n,
        Err(e) => return eprint_usage(&e),
    };
    let published = match known_relations(n) {
        Ok(p) => p,
        Err(e) => return eprint_usage(&e.to_string()),
    };
    let derived = jacobi_relations(n);
    let comparison = compare_relations(n).expect("dimension already validated");
    let doc = VarietyDoc {
        n,
        derived: labeled(&derived),
        published: labeled(&published),
        comparison,
    };
    match args
        .flags
        .get("format")
        .map(String::as_str)
        .unwrap_or("json")
    {
        "json" => println!("{}", to_json(&doc)),
        "text" => {
            println!("variety of filiform brackets, dimension {n}");
            println!("derived from the Jacobi identity:");
            for eq in &doc.derived {
                println!("  {}: {} = 0", eq.label, eq.poly);
            }
            println!("published description:");
            for eq in &doc.published {
                println!("  {}: {} = 0", eq.label, eq.poly);
            }
            let residues = doc.comparison.residues().len();
            println!(
                "comparison: {}",
                if residues == 0 {
                    "exact two-way rational-span match".to_string()
                } else {
                    format!("{residues} residue(s) flagged")
                }
            );
        }
        "latex" => {
            println!("\\begin{{align*}}");
            for eq in &doc.published {
                println!("  {} &= 0 \\\\", eq.latex);
            }
            println!("\\end{{align*}}");
        }
        other => return eprint_usage(&format!("unsupported format `{other}`")),
    }
    0
}

fn cmd_check_point(args: &Args) -> i32 {
    let Some(path) = args.positional.get(1) else {
        return eprint_usage("check-point needs a file");
    };
    let bytes = match std::fs::read(path) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: cannot read {path}: {e}");
            return 1;
        }
    };
    let parsed: PointFile = match serde_json::from_slice(&bytes) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: bad point file: {e}");
            return 1;
        }
    };
    let point = match FiliformPoint::new(parsed.n, parsed.values) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let membership = match crate::variety::membership(&point) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    #[derive(Serialize)]
    struct CheckPointDoc {
        input_digest: String,
        report: crate::variety::MembershipReport,
        claims_checked: Vec<(String, bool)>,
        all_claims_hold: bool,
    }
    let mut claims_checked = vec![("in_variety".to_string(), membership.in_variety)];
    if let Some(claims) = &parsed.claims {
        if let Some(c) = &claims.component {
            claims_checked.push((
                format!("component {c}"),
                membership.component(c).map(|m| m.member).unwrap_or(false),
            ));
        }
        if let Some(u) = &claims.open_set {
            claims_checked.push((
                format!("open set {u}"),
                membership.open_set(u).map(|m| m.member).unwrap_or(false),
            ));
        }
    }
    let all_claims_hold = claims_checked.iter().all(|(_, ok)| *ok);
    let doc = CheckPointDoc {
        input_digest: digest(&bytes),
        report: membership,
        claims_checked,
        all_claims_hold,
    };
    println!("{}", to_json(&doc));
    if doc.all_claims_hold {
        0
    } else {
        2
    }
}

fn cmd_deform(args: &Args) -> i32 {
    let n = match parse_n(args, 1) {
        Ok(n) => n,
        Err(e) => return eprint_usage(&e),
    };
    if !(6..=13).contains(&n) {
        return eprint_usage(&format!("dimension {n} outside the supported range 6..13"));
    }
    let model = generic_filiform(n);
    let mut base = model.mu.clone();
    let mut input_digest = None;
    if let Some(path) = args.flags.get("point") {
        let bytes = match std::fs::read(path) {
            Ok(b) => b,
            Err(e) => {
                eprintln!("error: cannot read {path}: {e}");
                return 1;
            }
        };
        input_digest = Some(digest(&bytes));
        let parsed: PointFile = match serde_json::from_slice(&bytes) {
            Ok(p) => p,
            Err(e) => {
                eprintln!("error: bad point file: {e}");
                return 1;
            }
        };
        let point = match FiliformPoint::new(parsed.n, parsed.values) {
            Ok(p) => p,
            Err(e) => {
                eprintln!("error: {e}");
                return 1;
            }
        };
        base = match specialize(&model, &point) {
            Ok(b) => b,
            Err(e) => {
                eprintln!("error: {e}");
                return 1;
            }
        };
    }
    let deformation = match canonical_deformation(&base) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let bracket: BilinearMap = match args.flags.get("t") {
        None => deformation.deformed.clone(),
        Some(literal) => match literal.parse::<Rational>() {
            Ok(t) => deformation.at_time(&t),
            Err(e) => return eprint_usage(&e.to_string()),
        },
    };
    #[derive(Serialize)]
    struct DeformDoc {
        n: usize,
        derivation: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        input_digest: Option<String>,
        direction: BilinearMap,
        deformed: BilinearMap,
    }
    let doc = DeformDoc {
        n,
        derivation: crate::deform::canonical_spec(n).name().to_string(),
        input_digest,
        direction: deformation.direction.clone(),
        deformed: bracket,
    };
    println!("{}", to_json(&doc));
    0
}

fn cmd_iso_eqs(args: &Args) -> i32 {
    let n = match parse_n(args, 1) {
        Ok(n) => n,
        Err(e) => return eprint_usage(&e),
    };
    let stage_name = args
        .flags
        .get("stage")
        .map(String::as_str)
        .unwrap_or("prop-g");
    let Some(stage) = Stage::parse(stage_name) else {
        return eprint_usage(&format!("unknown stage `{stage_name}`"));
    };
    let export = match export_equations(n, stage) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    match args
        .flags
        .get("format")
        .map(String::as_str)
        .unwrap_or("json")
    {
        "json" => println!("{}", to_json(&export)),
        "text" => {
            println!(
                "isomorphism equations, n = {}, stage = {}, direction = {}",
                export.n, export.stage, export.derivation
            );
            if let Some(w) = &export.warning {
                println!("warning: {w}");
            }
            for eq in &export.equations {
                println!("  {} = 0   where {} := {}", eq.label, eq.label, eq.poly);
            }
        }
        other => return eprint_usage(&format!("unsupported format `{other}`")),
    }
    0
}

fn cmd_verify(args: &Args) -> i32 {
    let target = args.positional.get(1).map(String::as_str).unwrap_or("all");
    let jobs: usize = args
        .flags
        .get("jobs")
        .and_then(|v| v.parse().ok())
        .unwrap_or(1);
    let start = std::time::Instant::now();
    let Some(summary) = report::verify_target(target, jobs.max(1)) else {
        return eprint_usage(&format!(
            "unknown verify target `{target}` (script names: {})",
            crate::isokit::script_names().join(", ")
        ));
    };
    let passed = summary.passed;
    let script_reports = if crate::isokit::script_names().contains(&target) {
        report::verify_scripts(Some(target)).1
    } else {
        Vec::new()
    };
    match args
        .flags
        .get("format")
        .map(String::as_str)
        .unwrap_or("text")
    {
        "json" => {
            #[derive(Serialize)]
            struct VerifyDoc {
                summary: crate::report::VerifySummary,
                #[serde(skip_serializing_if = "Vec::is_empty")]
                scripts: Vec<crate::isokit::VerificationReport>,
            }
            println!(
                "{}",
                to_json(&VerifyDoc {
                    summary,
                    scripts: script_reports,
                })
            );
        }
        _ => {
            // step-by-step report for single-script targets
            for report in &script_reports {
                println!("{} (n = {}):", report.script, report.dim);
                for note in &report.notes {
                    println!("  note: {note}");
                }
                for step in &report.steps {
                    println!(
                        "  [{}] {:4} {}: {}",
                        step.index,
                        if step.ok { "ok" } else { "FAIL" },
                        step.desc,
                        step.detail
                    );
                }
            }
            print!(
                "{}",
                render_text(&summary, Some(start.elapsed().as_millis()))
            );
        }
    }
    if passed {
        0
    } else {
        2
    }
}

/// LaTeX bracket table for the generic filiform bracket of dimension `n`.
pub fn bracket_table_latex(n: usize) -> String {
    let model = generic_filiform(n);
    let mut out = String::new();
    out.push_str("\\begin{eqnarray*}\n");
    for i in 0..n as u8 {
        for j in (i + 1)..n as u8 {
            let value = model.mu.value(i, j);
            if value.iter().all(Polynomial::is_zero) {
                continue;
            }
            let mut terms: Vec<String> = Vec::new();
            for (k, coeff) in value.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let rendered = if coeff.num_terms() == 1 {
                    let s = coeff.latex();
                    if s == "1" {
                        String::new()
                    } else {
                        s
                    }
                } else {
                    format!("( {} )", coeff.latex())
                };
                terms.push(format!("{rendered}x_{{{k}}}"));
            }
            out.push_str(&format!(
                "\\mu(x_{{{i}}}, x_{{{j}}}) &=& {} \\\\\n",
                terms.join(" + ")
            ));
        }
    }
    out.push_str("\\end{eqnarray*}\n");
    out
}

fn cmd_export(args: &Args) -> i32 {
    let what = args.flags.get("what").map(String::as_str).unwrap_or("");
    let format = args
        .flags
        .get("format")
        .map(String::as_str)
        .unwrap_or("json");
    match (what, format) {
        ("equations", _) => {
            let n: usize = match args.flags.get("n").map(|v| v.parse()) {
                Some(Ok(n)) => n,
                _ => return eprint_usage("export equations needs --n"),
            };
            let published = match known_relations(n) {
                Ok(p) => p,
                Err(e) => return eprint_usage(&e.to_string()),
            };
            let derived = jacobi_relations(n);
            #[derive(Serialize)]
            struct EquationsDoc {
                n: usize,
                derived: Vec<LabeledPoly>,
                published: Vec<LabeledPoly>,
            }
            let doc = EquationsDoc {
                n,
                derived: labeled(&derived),
                published: labeled(&published),
            };
            match format {
                "json" => println!("{}", to_json(&doc)),
                "latex" => {
                    println!("\\begin{{align*}}");
                    for eq in &doc.derived {
                        println!("  {} &= 0 \\\\", eq.latex);
                    }
                    println!("\\end{{align*}}");
                }
                "text" => {
                    println!("variety equations, n = {n}");
                    if doc.derived.is_empty() {
                        println!("  (none: the parameter space is the whole affine space)");
                    }
                    for eq in &doc.derived {
                        println!("  {}: {} = 0", eq.label, eq.poly);
                    }
                }
                other => return eprint_usage(&format!("unsupported format `{other}`")),
            }
            0
        }
        ("brackets", "latex") => {
            let n: usize = match args.flags.get("n").map(|v| v.parse()) {
                Some(Ok(n)) => n,
                _ => return eprint_usage("export brackets needs --n"),
            };
            print!("{}", bracket_table_latex(n));
            0
        }
        ("brackets", "json") => {
            let n: usize = match args.flags.get("n").map(|v| v.parse()) {
                Some(Ok(n)) => n,
                _ => return eprint_usage("export brackets needs --n"),
            };
            let model = generic_filiform(n);
            println!("{}", to_json(&model.mu));
            0
        }
        ("scripts", "json") => {
            #[derive(Serialize)]
            struct ScriptDoc {
                name: String,
                dim: usize,
                derivation: String,
                stage: String,
                parameter_subs: Vec<(String, String)>,
                nonzero: Vec<String>,
                variety: Vec<String>,
                steps: Vec<String>,
                goal: Option<String>,
                notes: Vec<String>,
            }
            let docs: Vec<ScriptDoc> = builtin_scripts()
                .iter()
                .map(|s| ScriptDoc {
                    name: s.name.clone(),
                    dim: s.context.n,
                    derivation: s.context.derivation.name().to_string(),
                    stage: s.context.stage.name().to_string(),
                    parameter_subs: s
                        .context
                        .parameter_subs
                        .iter()
                        .map(|(v, p)| (v.to_string(), p.to_string()))
                        .collect(),
                    nonzero: s
                        .context
                        .nonzero
                        .generators()
                        .iter()
                        .map(|(name, _)| name.clone())
                        .collect(),
                    variety: s
                        .context
                        .variety
                        .iter()
                        .map(|(name, _)| name.clone())
                        .collect(),
                    steps: s.steps.iter().map(|st| st.describe()).collect(),
                    goal: s.goal.map(|v: VarId| v.to_string()),
                    notes: s.notes.clone(),
                })
                .collect();
            println!("{}", to_json(&docs));
            0
        }
        ("scripts", "text") => {
            for s in builtin_scripts() {
                println!("{} (n = {}):", s.name, s.context.n);
                for note in &s.notes {
                    println!("  note: {note}");
                }
                for step in &s.steps {
                    println!("  - {}", step.describe());
                }
            }
            0
        }
        (w, f) => eprint_usage(&format!("unsupported export `{w}` with format `{f}`")),
    }
}

//! Symbolic isomorphism equations between a bracket and its deformation,
//! the triangular normal form of the candidate isomorphism matrix, and a
//! replayable script interpreter certifying the elimination chains that
//! force `t = 0`.

mod builtin;
mod defect;
mod matrix;
mod script;

pub use builtin::{builtin_scripts, script_names};
pub use defect::{iso_defect, EqLabel, EquationExport, ExportedEquation};
pub use matrix::{generic_g, IsoError, IsoMatrix, Stage};
pub use script::{
    expanded_defects, run_script, ProofScript, ScriptContext, ScriptError, Step, StepReport,
    VerificationReport,
};

use crate::deform::{canonical_spec, derivation, phi_from_derivation};
use crate::exactalg::{Polynomial, VarId};
use crate::liecore::SubspaceSplit;
use crate::vergne::generic_filiform;

/// Full defect listing for the canonical deformation of dimension `n` at a
/// matrix stage. Dimensions 7 and 8 are exported with a warning: the
/// engine generates their systems but ships no certified script for them.
pub fn export_equations(n: usize, stage: Stage) -> Result<EquationExport, IsoError> {
    assert!((6..=13).contains(&n), "desk-scale bound");
    let model = generic_filiform(n);
    let spec = canonical_spec(n);
    let d = derivation(&spec).expect("canonical choice is valid");
    let split = SubspaceSplit::standard(n);
    let phi = phi_from_derivation(&model.mu, &split, &d).expect("hypotheses hold generically");
    let mu_t = model
        .mu
        .add(&phi.scale_poly(&Polynomial::var(VarId::Time)))
        .expect("same dimension");
    let g = generic_g(n, stage)?;
    let defects = iso_defect(&mu_t, &model.mu, &g)?;
    let warning = if n < 9 {
        Some(format!(
            "dimension {n}: equation system generated for audit; no certified \
             elimination script ships for this dimension"
        ))
    } else {
        None
    };
    Ok(EquationExport::from_defects(
        n,
        stage.name(),
        spec.name(),
        warning,
        &defects,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deform::{canonical_spec, derivation, phi_from_derivation, DerivationSpec};
    use crate::exactalg::parse_poly;
    use crate::vergne::generic_filiform;
    use std::collections::BTreeMap;

    fn p(s: &str) -> Polynomial {
        parse_poly(s).unwrap()
    }

    #[test]
    fn identity_matrix_no_deformation_gives_no_defects() {
        let n = 9;
        let model = generic_filiform(n);
        let raw = generic_g(n, Stage::Raw).unwrap();
        let mut bindings: BTreeMap<VarId, Polynomial> = BTreeMap::new();
        for i in 1..=n {
            for j in 1..=i.min(n) {
                let v = VarId::entry(i as u8, j as u8);
                bindings.insert(
                    v,
                    if i == j {
                        Polynomial::one()
                    } else {
                        Polynomial::zero()
                    },
                );
            }
        }
        bindings.insert(VarId::entry(1, 2), Polynomial::zero());
        let id = raw.substitute(&bindings);
        let defects = iso_defect(&model.mu, &model.mu, &id).unwrap();
        assert!(defects.is_empty());
    }

    #[test]
    fn prop_g_stage_refused_below_dimension_9() {
        assert!(matches!(
            generic_g(8, Stage::PropG),
            Err(IsoError::BadStage("prop-g", 8))
        ));
        assert!(generic_g(8, Stage::PostDiagonal).is_ok());
    }

    #[test]
    fn raw_matrix_symbol_count() {
        // full lower triangle plus m[1,2]: n(n+1)/2 + 1 bare variables
        let g = generic_g(9, Stage::Raw).unwrap();
        assert_eq!(g.symbolic_entry_count(), 9 * 10 / 2 + 1);
        assert_eq!(g.symbolic_entry_count(), 46);
    }

    #[test]
    fn raw_export_contains_diagonal_relation() {
        let export = export_equations(9, Stage::Raw).unwrap();
        let e012 = export
            .equations
            .iter()
            .find(|e| e.label == "E[0,1]^2")
            .expect("E[0,1]^2 present");
        let poly = parse_poly(&e012.poly).unwrap();
        // the diagonal relation m[3,3] = m[1,1] m[2,2] sits inside
        assert_eq!(poly.coeff_of_power(VarId::entry(3, 3), 1), p("1"));
        let rest = &poly - &p("m[3,3] - m[1,1]*m[2,2]");
        assert!(rest.coeff_of_power(VarId::entry(3, 3), 1).is_zero());
        assert!(!poly.is_zero());
    }

    #[test]
    fn dim7_and_8_export_with_warning() {
        for n in [7usize, 8] {
            let export = export_equations(n, Stage::Raw).unwrap();
            assert!(export.warning.is_some());
            assert!(!export.equations.is_empty());
        }
        assert!(export_equations(9, Stage::PropG).unwrap().warning.is_none());
    }

    #[test]
    fn time_zero_specialization_is_automorphism_system() {
        let n = 9;
        let model = generic_filiform(n);
        let g = generic_g(n, Stage::PropG).unwrap();
        // defects of the deformed bracket, then t := 0
        let spec = canonical_spec(n);
        let d = derivation(&spec).unwrap();
        let phi = phi_from_derivation(&model.mu, &crate::liecore::SubspaceSplit::standard(n), &d)
            .unwrap();
        let mu_t = model
            .mu
            .add(&phi.scale_poly(&Polynomial::var(VarId::Time)))
            .unwrap();
        let deformed = iso_defect(&mu_t, &model.mu, &g).unwrap();
        let automorphism = iso_defect(&model.mu, &model.mu, &g).unwrap();
        let mut zero_t = BTreeMap::new();
        zero_t.insert(VarId::Time, Polynomial::zero());
        for (label, poly) in &deformed {
            let specialized = poly.substitute(&zero_t);
            let expected = automorphism.get(label).cloned().unwrap_or_default();
            assert_eq!(specialized, expected, "{label}");
        }
        for label in automorphism.keys() {
            assert!(deformed.contains_key(label));
        }
    }

    #[test]
    fn defect_difference_between_directions_is_local() {
        // for odd n both shift derivations apply; the equations may differ
        // only at pairs where the deformation direction is supported:
        // i = 1 and j in 2..=4 for D3, j in 2..=5 for D4
        let n = 11;
        let model = generic_filiform(n);
        let g = generic_g(n, Stage::PropG).unwrap();
        let split = crate::liecore::SubspaceSplit::standard(n);
        let mut defects = Vec::new();
        for spec in [DerivationSpec::D3 { n }, DerivationSpec::D4 { n }] {
            let d = derivation(&spec).unwrap();
            let phi = phi_from_derivation(&model.mu, &split, &d).unwrap();
            let mu_t = model
                .mu
                .add(&phi.scale_poly(&Polynomial::var(VarId::Time)))
                .unwrap();
            defects.push(iso_defect(&mu_t, &model.mu, &g).unwrap());
        }
        let labels: std::collections::BTreeSet<EqLabel> = defects[0]
            .keys()
            .chain(defects[1].keys())
            .copied()
            .collect();
        for label in labels {
            let a = defects[0].get(&label).cloned().unwrap_or_default();
            let b = defects[1].get(&label).cloned().unwrap_or_default();
            if a != b {
                assert_eq!(label.i, 1, "difference at {label}");
                assert!((2..=5).contains(&label.j), "difference at {label}");
            }
        }
    }

    #[test]
    fn dim10_t_terms_cancel_in_e127_minus_e138() {
        // oracle-validated reading of the first-component narrative: the
        // difference E[1,2]^7 - E[1,3]^8 is free of t and is a multiple of
        // the first variety relation, even before any m[4,1] conclusion
        use crate::exactalg::MultiplicativeSet;
        let subs = vec![(VarId::param(4, 9), Polynomial::zero())];
        let ctx = ScriptContext {
            n: 10,
            derivation: DerivationSpec::D3 { n: 10 },
            stage: Stage::PropG,
            parameter_subs: subs,
            nonzero: MultiplicativeSet::new(vec![
                ("a[2,6]".into(), p("a[2,6]")),
                ("a[1,4]".into(), p("a[1,4]")),
            ]),
            variety: vec![],
            assumptions: vec![],
        };
        let mut steps = Vec::new();
        let solve_step = |steps: &mut Vec<Step>, i: u8, j: u8, k: u8, ti: u8, tj: u8| {
            steps.push(Step::Expand(EqLabel::new(i, j, k)));
            steps.push(Step::SolveLinear {
                fact: EqLabel::new(i, j, k).to_string(),
                var: VarId::entry(ti, tj),
            });
        };
        solve_step(&mut steps, 0, 1, 4, 5, 3);
        solve_step(&mut steps, 0, 2, 5, 6, 4);
        solve_step(&mut steps, 0, 3, 6, 7, 5);
        steps.push(Step::Expand(EqLabel::new(1, 2, 6)));
        steps.push(Step::SolveLinear {
            fact: "E[1,2]^6".into(),
            var: VarId::entry(4, 2),
        });
        solve_step(&mut steps, 0, 4, 7, 8, 6);
        solve_step(&mut steps, 0, 5, 8, 9, 7);
        for j in 1..=5u8 {
            solve_step(&mut steps, 0, j, j + 4, j + 5, j + 2);
        }
        steps.push(Step::Expand(EqLabel::new(1, 2, 7)));
        steps.push(Step::Expand(EqLabel::new(1, 3, 8)));
        steps.push(Step::Combine {
            name: "D".into(),
            facts: vec![
                (Polynomial::one(), "E[1,2]^7".into()),
                (Polynomial::int(-1), "E[1,3]^8".into()),
            ],
            generators: vec![],
        });
        let script = ProofScript {
            name: "t-cancellation".into(),
            context: ctx,
            steps,
            goal: None,
            notes: vec![],
        };
        let report = run_script(&script);
        assert!(report.passed, "{:#?}", report.steps.last());
        let detail = &report.steps.last().unwrap().detail;
        let diff = parse_poly(detail.strip_prefix("D = ").unwrap()).unwrap();
        assert_eq!(diff.degree_in(VarId::Time), 0, "t must cancel: {diff}");
        let f10_1 = crate::variety::known_relations(10).unwrap().equations[0]
            .1
            .clone();
        let quotient = diff
            .try_div(&f10_1)
            .expect("multiple of the first relation");
        assert_eq!(quotient, p("m[3,1]*m[3,2] - m[4,1]"));
    }

    #[test]
    fn prop_g_defect_example_dim10() {
        // with a[4,9] = 0 the top-right corner equation reads
        // m[10,9] - m[3,2]
        let ctx = ScriptContext {
            n: 10,
            derivation: DerivationSpec::D3 { n: 10 },
            stage: Stage::PropG,
            parameter_subs: vec![(VarId::param(4, 9), Polynomial::zero())],
            nonzero: crate::exactalg::MultiplicativeSet::empty(),
            variety: vec![],
            assumptions: vec![],
        };
        let defects = expanded_defects(&ctx).unwrap();
        let e = defects.get(&EqLabel::new(0, 7, 9)).unwrap();
        assert_eq!(e.num, p("m[10,9] - m[3,2]"));
    }
}

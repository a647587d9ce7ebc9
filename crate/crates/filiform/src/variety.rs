//! Varieties of filiform brackets: equations derived from the Jacobi
//! identity, the published equation systems and irreducible components for
//! dimensions 8-11, the open sets used by the rigidity analysis, and exact
//! point-membership reports.

use crate::exactalg::{
    linear_span_member, parse_poly, MultiplicativeSet, Polynomial, Rational, VarId,
};
use crate::liecore::jacobiator;
use crate::vergne::{delta_set, generic_filiform, generic_psi, FiliformPoint};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VarietyError {
    #[error("no published equation system for dimension {0}")]
    UnsupportedDim(usize),
}

/// A labelled list of polynomials in the parameters `a[r,s]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationSet {
    pub n: usize,
    pub equations: Vec<(String, Polynomial)>,
}

impl EquationSet {
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.equations.iter().map(|(_, p)| p.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.equations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }
}

/// An irreducible component: its published equations plus the solved
/// substitutions the elimination proofs use on it.
#[derive(Clone, Debug)]
pub struct ComponentDef {
    pub n: usize,
    pub name: String,
    pub equations: EquationSet,
    pub normal_substitutions: Vec<(VarId, Polynomial)>,
}

/// An open set described by its non-vanishing polynomials.
#[derive(Clone, Debug)]
pub struct OpenSetDef {
    pub n: usize,
    pub name: String,
    pub inequations: MultiplicativeSet,
}

fn p(s: &str) -> Polynomial {
    parse_poly(s).expect("static polynomial literal")
}

/// Nonzero coefficients of `jacobiator(mu)` for the generic filiform bracket,
/// deduplicated up to nonzero rational scale and labelled by their first
/// occurrence `J[i,j,k]^l`.
pub fn jacobi_relations(n: usize) -> EquationSet {
    assert!((3..=13).contains(&n), "desk-scale bound");
    let model = generic_filiform(n);
    let jac = jacobiator(&model.mu);
    let mut seen: Vec<Polynomial> = Vec::new();
    let mut equations: Vec<(String, Polynomial)> = Vec::new();
    for (&(i, j, k, l), coeff) in jac.entries() {
        let monic = coeff.normalized();
        if seen.contains(&monic) {
            continue;
        }
        seen.push(monic.clone());
        equations.push((format!("J[{i},{j},{k}]^{l}"), monic));
    }
    EquationSet { n, equations }
}

/// The published description of the variety, transcribed verbatim.
pub fn known_relations(n: usize) -> Result<EquationSet, VarietyError> {
    let equations: Vec<(String, Polynomial)> =
        match n {
            7 => Vec::new(),
            8 => vec![("F8.1".into(), p("a[3,7]*(2*a[1,4]+a[2,6])"))],
            9 => vec![(
                "F9.1".into(),
                p("-3*a[2,6]^2 + a[2,6]*a[3,8] + 2*a[1,4]*a[3,8]"),
            )],
            10 => vec![
            (
                "F10.1".into(),
                p("-3*a[2,6]^2 + a[2,6]*a[3,8] + 2*a[1,4]*a[3,8]"),
            ),
            (
                "F10.2".into(),
                p("-7*a[2,6]*a[2,7] + (2*a[1,4] + a[2,6])*a[3,9] + 3*(a[1,5] + a[2,7])*a[3,8] \
                   - (a[2,8] + 2*a[1,6])*a[4,9]"),
            ),
            ("F10.3".into(), p("a[4,9]*(2*a[1,4] - a[2,6] - a[3,8])")),
        ],
            11 => vec![
            (
                "F11.1".into(),
                p("-3*a[2,6]^2 + a[2,6]*a[3,8] + 2*a[1,4]*a[3,8]"),
            ),
            (
                "F11.2".into(),
                p("(6*a[3,8] - 4*a[2,6])*a[3,8] + (2*a[1,4] - a[2,6] - a[3,8])*a[4,10]"),
            ),
            (
                "F11.3".into(),
                p("-7*a[2,6]*a[2,7] + (2*a[1,4] + a[2,6])*a[3,9] + 3*(a[1,5] + a[2,7])*a[3,8]"),
            ),
            (
                "F11.4".into(),
                p("-4*a[2,7]^2 - 8*a[2,6]*a[2,8] + (4*a[1,6] + 6*a[2,8])*a[3,8] \
                   + 3*(a[1,5] + a[2,7])*a[3,9] + (2*a[1,4] + a[2,6])*a[3,10] \
                   - (2*a[1,6] + a[2,8])*a[4,10]"),
            ),
        ],
            _ => return Err(VarietyError::UnsupportedDim(n)),
        };
    Ok(EquationSet { n, equations })
}

/// One direction of a span comparison.
#[derive(Clone, Debug, Serialize)]
pub struct SpanOutcome {
    pub label: String,
    /// Coefficients over the other set, absent when outside the span.
    pub coefficients: Option<Vec<Rational>>,
}

/// Two-way rational-span comparison between the derived Jacobi coefficients
/// and the published system. Residues are reported, never silently accepted.
#[derive(Clone, Debug, Serialize)]
pub struct ComparisonReport {
    pub n: usize,
    pub derived_in_published: Vec<SpanOutcome>,
    pub published_in_derived: Vec<SpanOutcome>,
}

impl ComparisonReport {
    pub fn residues(&self) -> Vec<&SpanOutcome> {
        self.derived_in_published
            .iter()
            .chain(self.published_in_derived.iter())
            .filter(|o| o.coefficients.is_none())
            .collect()
    }

    pub fn exact_match(&self) -> bool {
        self.residues().is_empty()
    }
}

pub fn compare_relations(n: usize) -> Result<ComparisonReport, VarietyError> {
    let derived = jacobi_relations(n);
    let published = known_relations(n)?;
    let derived_polys = derived.polynomials();
    let published_polys = published.polynomials();
    let expand = |set: &EquationSet, basis: &[Polynomial]| -> Vec<SpanOutcome> {
        set.equations
            .iter()
            .map(|(label, poly)| SpanOutcome {
                label: label.clone(),
                coefficients: linear_span_member(poly, basis),
            })
            .collect()
    };
    Ok(ComparisonReport {
        n,
        derived_in_published: expand(&derived, &published_polys),
        published_in_derived: expand(&published, &derived_polys),
    })
}

/// Published irreducible-component systems for `n` in `{8, 10, 11}`.
pub fn component_defs(n: usize) -> Result<Vec<ComponentDef>, VarietyError> {
    let defs = match n {
        8 => vec![
            ComponentDef {
                n,
                name: "C8_1".into(),
                equations: EquationSet {
                    n,
                    equations: vec![("C8_1.1".into(), p("a[3,7]"))],
                },
                normal_substitutions: vec![(VarId::param(3, 7), Polynomial::zero())],
            },
            ComponentDef {
                n,
                name: "C8_2".into(),
                equations: EquationSet {
                    n,
                    equations: vec![("C8_2.1".into(), p("2*a[1,4] + a[2,6]"))],
                },
                normal_substitutions: vec![(VarId::param(2, 6), p("-2*a[1,4]"))],
            },
        ],
        10 => vec![
            ComponentDef {
                n,
                name: "C10_1".into(),
                equations: EquationSet {
                    n,
                    equations: vec![
                        ("C10_1.1".into(), p("a[4,9]")),
                        (
                            "C10_1.2".into(),
                            p("-3*a[2,6]^2 + a[2,6]*a[3,8] + 2*a[1,4]*a[3,8]"),
                        ),
                        (
                            "C10_1.3".into(),
                            p("3*a[2,6]^2*a[3,9] + (-7*a[2,6]*a[2,7] + 3*a[1,5]*a[3,8] \
                               + 3*a[2,7]*a[3,8])*a[3,8]"),
                        ),
                        (
                            "C10_1.4".into(),
                            p("-7*a[2,6]*a[2,7] + (3*a[1,5] + 3*a[2,7])*a[3,8] \
                               + (2*a[1,4] + a[2,6])*a[3,9]"),
                        ),
                    ],
                },
                normal_substitutions: vec![(VarId::param(4, 9), Polynomial::zero())],
            },
            ComponentDef {
                n,
                name: "C10_2".into(),
                equations: EquationSet {
                    n,
                    equations: vec![
                        ("C10_2.1".into(), p("a[2,6] - a[3,8]")),
                        (
                            "C10_2.2".into(),
                            p("(3*a[1,5] - 4*a[2,7] + 3*a[3,9])*a[3,8] \
                               - (2*a[1,6] + a[2,8])*a[4,9]"),
                        ),
                        ("C10_2.3".into(), p("a[1,4] - a[3,8]")),
                    ],
                },
                normal_substitutions: vec![
                    (VarId::param(2, 6), p("a[1,4]")),
                    (VarId::param(3, 8), p("a[1,4]")),
                ],
            },
            ComponentDef {
                n,
                name: "C10_3".into(),
                equations: EquationSet {
                    n,
                    equations: vec![
                        ("C10_3.1".into(), p("3*a[2,6] + a[3,8]")),
                        (
                            "C10_3.2".into(),
                            p("(9*a[1,5] + 16*a[2,7] + a[3,9])*a[3,8] \
                               - 3*(2*a[1,6] + a[2,8])*a[4,9]"),
                        ),
                        ("C10_3.3".into(), p("3*a[1,4] - a[3,8]")),
                    ],
                },
                normal_substitutions: vec![
                    (VarId::param(2, 6), p("-a[1,4]")),
                    (VarId::param(3, 8), p("3*a[1,4]")),
                ],
            },
        ],
        11 => vec![
            ComponentDef {
                n,
                name: "C11_1".into(),
                equations: EquationSet {
                    n,
                    equations: vec![
                        ("C11_1.1".into(), p("a[1,4] - a[2,7]")),
                        (
                            "C11_1.2".into(),
                            p("-3*a[2,6]^2 + a[2,6]*a[3,8] + 2*a[1,4]*a[3,8]"),
                        ),
                        (
                            "C11_1.3".into(),
                            p("-2*(2*a[2,6] - 3*a[3,8])*a[3,8] \
                               + (2*a[2,7] - a[2,6] - a[3,8])*a[4,10]"),
                        ),
                        (
                            "C11_1.4".into(),
                            p("-7*a[2,6]*a[2,7] + (2*a[2,7] + a[2,6])*a[3,9] \
                               + (3*a[1,5] + 3*a[2,7])*a[3,8]"),
                        ),
                        (
                            "C11_1.5".into(),
                            p("-4*a[2,7]^2 - (8*a[2,6] - 6*a[3,8] + a[4,10])*a[2,8] \
                               + (3*a[1,5] + 3*a[2,7])*a[3,9] + (2*a[2,7] + a[2,6])*a[3,10] \
                               + (4*a[3,8] - 2*a[4,10])*a[1,6]"),
                        ),
                    ],
                },
                normal_substitutions: vec![(VarId::param(2, 7), p("a[1,4]"))],
            },
            ComponentDef {
                n,
                name: "C11_2".into(),
                equations: EquationSet {
                    n,
                    equations: vec![
                        (
                            "C11_2.1".into(),
                            p("a[2,8] + a[2,7]^2 - 3*a[2,7]*a[2,9] - 3*a[2,9]"),
                        ),
                        (
                            "C11_2.2".into(),
                            p("-3*a[2,6]^2 + a[2,6]*a[3,8] + 2*a[1,4]*a[3,8]"),
                        ),
                        (
                            "C11_2.3".into(),
                            p("-2*(2*a[2,6] - 3*a[3,8])*a[3,8] \
                               + (2*a[1,4] - a[2,6] - a[3,8])*a[4,10]"),
                        ),
                        (
                            "C11_2.4".into(),
                            p("-7*a[2,6]*a[2,7] + 3*(a[1,5] + a[2,7])*a[3,8] \
                               + (2*a[1,4] + a[2,6])*a[3,9]"),
                        ),
                        (
                            "C11_2.5".into(),
                            p("(-4 + 8*a[2,6] - 6*a[3,8] + a[4,10])*a[2,7]^2 \
                               + (-24*a[2,6]*a[2,9] + 18*a[3,8]*a[2,9] + 3*a[3,9] \
                               - 3*a[2,9]*a[4,10])*a[2,7] \
                               + (-24*a[2,6] + 3*a[4,10] + 18*a[3,8])*a[2,9] \
                               + (4*a[3,8] - 2*a[4,10])*a[1,6] \
                               + (2*a[1,4] + a[2,6])*a[3,10] + 3*a[1,5]*a[3,9]"),
                        ),
                    ],
                },
                normal_substitutions: vec![(
                    VarId::param(2, 8),
                    p("-a[2,7]^2 + 3*a[2,7]*a[2,9] + 3*a[2,9]"),
                )],
            },
        ],
        _ => return Err(VarietyError::UnsupportedDim(n)),
    };
    Ok(defs)
}

/// The open set `U` common to all dimensions, plus the per-dimension
/// refinement `U^n` used by the non-isomorphism propositions.
pub fn open_sets(n: usize) -> Result<Vec<OpenSetDef>, VarietyError> {
    let u_gens = vec![
        ("a[1,4]".to_string(), p("a[1,4]")),
        ("a[1,5]".to_string(), p("a[1,5]")),
        (
            "U3".to_string(),
            p("3*a[2,6]*a[1,5]*(a[1,4] - a[2,6]) - 2*a[2,7]*a[1,4]^2"),
        ),
    ];
    let extra: Vec<(String, Polynomial)> = match n {
        9 => vec![
            ("2a26-a14".to_string(), p("2*a[2,6] - a[1,4]")),
            ("a[3,8]".to_string(), p("a[3,8]")),
        ],
        10 => vec![
            ("a[2,6]".to_string(), p("a[2,6]")),
            ("a[3,8]".to_string(), p("a[3,8]")),
            ("a14^2+a27*a49".to_string(), p("a[1,4]^2 + a[2,7]*a[4,9]")),
            (
                "15a14^2-a27*a49".to_string(),
                p("15*a[1,4]^2 - a[2,7]*a[4,9]"),
            ),
        ],
        11 => vec![
            ("a[2,6]".to_string(), p("a[2,6]")),
            ("a[3,8]".to_string(), p("a[3,8]")),
        ],
        _ => return Err(VarietyError::UnsupportedDim(n)),
    };
    let mut un_gens = u_gens.clone();
    un_gens.extend(extra);
    Ok(vec![
        OpenSetDef {
            n,
            name: "U".into(),
            inequations: MultiplicativeSet::new(u_gens),
        },
        OpenSetDef {
            n,
            name: format!("U{n}"),
            inequations: MultiplicativeSet::new(un_gens),
        },
    ])
}

/// A witness point together with its claimed memberships.
#[derive(Clone, Debug)]
pub struct ExamplePoint {
    pub point: FiliformPoint,
    /// Component the point is claimed to lie on (`None` when the variety is
    /// irreducible).
    pub component: Option<String>,
    pub open_set: String,
}

/// The six witness points certifying that the open sets meet every
/// irreducible component.
pub fn example_points() -> Vec<ExamplePoint> {
    let pt = |n: usize, vals: &[&str]| FiliformPoint::parse(n, vals).expect("static point");
    vec![
        ExamplePoint {
            point: pt(9, &["1", "-1", "0", "0", "0", "1", "1", "0", "1"]),
            component: None,
            open_set: "U9".into(),
        },
        ExamplePoint {
            point: pt(
                10,
                &[
                    "1", "-16", "0", "0", "0", "0", "4", "0", "0", "0", "8", "64", "0",
                ],
            ),
            component: Some("C10_1".into()),
            open_set: "U10".into(),
        },
        ExamplePoint {
            point: pt(
                10,
                &[
                    "1", "4", "0", "0", "0", "0", "1", "3", "0", "0", "1", "0", "0",
                ],
            ),
            component: Some("C10_2".into()),
            open_set: "U10".into(),
        },
        ExamplePoint {
            point: pt(
                10,
                &[
                    "1", "-16", "0", "0", "0", "0", "-1", "9", "0", "0", "3", "0", "0",
                ],
            ),
            component: Some("C10_3".into()),
            open_set: "U10".into(),
        },
        ExamplePoint {
            point: pt(
                11,
                &[
                    "1", "1/6", "0", "0", "0", "0", "0", "4", "1", "-5/12", "0", "0", "8", "0",
                    "0", "128/5",
                ],
            ),
            component: Some("C11_1".into()),
            open_set: "U11".into(),
        },
        ExamplePoint {
            point: pt(
                11,
                &[
                    "1", "1", "0", "0", "0", "0", "0", "4", "0", "0", "0", "0", "8", "-6", "3",
                    "128/5",
                ],
            ),
            component: Some("C11_2".into()),
            open_set: "U11".into(),
        },
    ]
}

/// Exact evaluation of every published equation, component system and open
/// set at one point. All verdicts are recomputable from the recorded values.
#[derive(Clone, Debug, Serialize)]
pub struct MembershipReport {
    pub n: usize,
    pub point: Vec<Rational>,
    pub equation_values: Vec<(String, Rational)>,
    pub in_variety: bool,
    pub components: Vec<ComponentMembership>,
    pub open_sets: Vec<OpenSetMembership>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentMembership {
    pub name: String,
    pub values: Vec<(String, Rational)>,
    pub member: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OpenSetMembership {
    pub name: String,
    pub values: Vec<(String, Rational)>,
    pub member: bool,
}

impl MembershipReport {
    pub fn component(&self, name: &str) -> Option<&ComponentMembership> {
        self.components.iter().find(|c| c.name == name)
    }

    pub fn open_set(&self, name: &str) -> Option<&OpenSetMembership> {
        self.open_sets.iter().find(|c| c.name == name)
    }
}

pub fn membership(point: &FiliformPoint) -> Result<MembershipReport, VarietyError> {
    let n = point.n;
    if !matches!(n, 8..=11) {
        return Err(VarietyError::UnsupportedDim(n));
    }
    let assignment = point.assignment();
    let eval = |poly: &Polynomial| -> Rational {
        poly.eval(&assignment).expect("point binds every parameter")
    };
    let relations = known_relations(n)?;
    let equation_values: Vec<(String, Rational)> = relations
        .equations
        .iter()
        .map(|(label, poly)| (label.clone(), eval(poly)))
        .collect();
    let in_variety = equation_values.iter().all(|(_, v)| v.is_zero());

    let components = match component_defs(n) {
        Ok(defs) => defs
            .into_iter()
            .map(|def| {
                let values: Vec<(String, Rational)> = def
                    .equations
                    .equations
                    .iter()
                    .map(|(label, poly)| (label.clone(), eval(poly)))
                    .collect();
                let member = values.iter().all(|(_, v)| v.is_zero());
                ComponentMembership {
                    name: def.name,
                    values,
                    member,
                }
            })
            .collect(),
        Err(_) => Vec::new(),
    };

    let open_sets_list = match open_sets(n) {
        Ok(defs) => defs
            .into_iter()
            .map(|def| {
                let values: Vec<(String, Rational)> = def
                    .inequations
                    .generators()
                    .iter()
                    .map(|(label, poly)| (label.clone(), eval(poly)))
                    .collect();
                let member = values.iter().all(|(_, v)| !v.is_zero());
                OpenSetMembership {
                    name: def.name,
                    values,
                    member,
                }
            })
            .collect(),
        Err(_) => Vec::new(),
    };

    Ok(MembershipReport {
        n,
        point: point.values.clone(),
        equation_values,
        in_variety,
        components,
        open_sets: open_sets_list,
    })
}

/// Outcome of rewriting one published equation through a component's solved
/// substitutions.
#[derive(Clone, Debug, Serialize)]
pub enum SubstitutionOutcome {
    /// The substitution annihilates the equation.
    Zero,
    /// The substituted equation is a rational combination of the component's
    /// remaining (substituted) equations.
    InSpan(Vec<Rational>),
    /// Leftover polynomial outside that span; surfaced as data.
    Residue(String),
}

/// Per-component outcomes of [`component_substitution_check`], keyed by the
/// label of the pushed-through variety equation.
pub type SubstitutionChecks = Vec<(String, Vec<(String, SubstitutionOutcome)>)>;

/// For each component of dimension `n`, push the published variety equations
/// through the component's normal substitutions and express the results in
/// the span of the component's own substituted equations.
pub fn component_substitution_check(n: usize) -> Result<SubstitutionChecks, VarietyError> {
    let relations = known_relations(n)?;
    let mut out = Vec::new();
    for def in component_defs(n)? {
        let bindings: BTreeMap<VarId, Polynomial> =
            def.normal_substitutions.iter().cloned().collect();
        let reduced_component: Vec<Polynomial> = def
            .equations
            .equations
            .iter()
            .map(|(_, poly)| poly.substitute(&bindings))
            .filter(|poly| !poly.is_zero())
            .collect();
        let mut rows = Vec::new();
        for (label, poly) in &relations.equations {
            let image = poly.substitute(&bindings);
            let outcome = if image.is_zero() {
                SubstitutionOutcome::Zero
            } else {
                match linear_span_member(&image, &reduced_component) {
                    Some(coeffs) => SubstitutionOutcome::InSpan(coeffs),
                    None => SubstitutionOutcome::Residue(image.to_string()),
                }
            };
            rows.push((label.clone(), outcome));
        }
        out.push((def.name, rows));
    }
    Ok(out)
}

/// Raw (un-deduplicated) Jacobi coefficients of the generic bracket,
/// evaluated at a point. Used to certify point membership independently of
/// the published systems.
pub fn raw_jacobi_values_at(point: &FiliformPoint) -> Vec<((u8, u8, u8, u8), Rational)> {
    let model = generic_filiform(point.n);
    let jac = jacobiator(&model.mu);
    let assignment = point.assignment();
    jac.entries()
        .map(|(&key, poly)| (key, poly.eval(&assignment).expect("point binds parameters")))
        .collect()
}

/// The identity `jacobiator(mu0 + psi) = psi o psi` for the generic cocycle:
/// returns the difference, which should be identically zero.
pub fn jacobi_cross_terms(n: usize) -> crate::liecore::TriForm {
    use crate::liecore::circ;
    let model = generic_filiform(n);
    let psi = generic_psi(n);
    let jac = jacobiator(&model.mu);
    let psi_sq = circ(&psi, &psi).expect("same dim");
    // jac - psi o psi
    let mut diff = jac;
    for (&(i, j, k, l), c) in psi_sq.entries() {
        diff.add_entry(i, j, k, l, -c);
    }
    diff
}

/// Check `|Delta_n|` against the published counts.
pub fn delta_counts_match() -> bool {
    delta_set(9).len() == 9 && delta_set(10).len() == 13 && delta_set(11).len() == 16
}

//! Linear deformations `mu_t = mu + t*phi_D` of nilpotent brackets.
//!
//! Given a codimension-2 ideal `h` containing the commutator, a complement
//! `<x_0, x_1>`, and a derivation `D` of `h` commuting with `ad(x_0)` on
//! `h`, the alternating map
//!
//! ```text
//! phi_D(x_0, x_1) = 0,  phi_D(x_0, h) = 0,  phi_D(x_1, h) = D(h),  phi_D(h, h') = 0
//! ```
//!
//! is simultaneously a Lie bracket and a 2-cocycle for `mu`, so
//! `mu_t = mu + t*phi_D` is a Lie algebra for every `t`. Two concrete
//! derivations of the filiform ideal `h = <x_2 .. x_{n-1}>` are provided
//! (`D3`, and `D4` for odd `n`), together with the codimension-1
//! Grunewald-O'Halloran variant.

use crate::exactalg::{Polynomial, VarId};
use crate::liecore::{
    ad, circ, cocycle_defect, commutes_with, is_derivation, jacobiator, BilinearMap,
    LinearOperator, SubspaceSplit, TriForm,
};

#[derive(Debug, Clone, thiserror::Error)]
pub enum DeformError {
    #[error("bad dimension for {0}: n = {1}")]
    BadDimension(&'static str, usize),
    #[error("construction hypotheses violated: {0}")]
    HypothesisViolated(String),
    #[error("the given indices do not span an ideal: bracket ({0},{1}) leaves it")]
    NotAnIdeal(u8, u8),
    #[error("the operator is not a derivation of the ideal (defect at ({0},{1}))")]
    NotADerivation(u8, u8),
}

/// The two shift derivations of the filiform ideal, or a custom operator.
#[derive(Clone, Debug)]
pub enum DerivationSpec {
    /// `x_2 -> x_{n-3}, x_3 -> x_{n-2}, x_4 -> x_{n-1}`, zero beyond. Needs `n >= 6`.
    D3 {
        n: usize,
    },
    /// `x_2 -> x_{n-4}, ..., x_5 -> x_{n-1}`, zero beyond. Needs odd `n >= 7`.
    D4 {
        n: usize,
    },
    Custom {
        n: usize,
        op: LinearOperator,
    },
}

impl DerivationSpec {
    pub fn dim(&self) -> usize {
        match self {
            DerivationSpec::D3 { n } | DerivationSpec::D4 { n } => *n,
            DerivationSpec::Custom { n, .. } => *n,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            DerivationSpec::D3 { .. } => "D3",
            DerivationSpec::D4 { .. } => "D4",
            DerivationSpec::Custom { .. } => "custom",
        }
    }
}

/// Materialize the operator of a [`DerivationSpec`].
pub fn derivation(spec: &DerivationSpec) -> Result<LinearOperator, DeformError> {
    match spec {
        DerivationSpec::D3 { n } => {
            if *n < 6 {
                return Err(DeformError::BadDimension("D3", *n));
            }
            let mut op = LinearOperator::zero(*n);
            op.set(*n - 3, 2, Polynomial::one());
            op.set(*n - 2, 3, Polynomial::one());
            op.set(*n - 1, 4, Polynomial::one());
            Ok(op)
        }
        DerivationSpec::D4 { n } => {
            if *n < 7 || *n % 2 == 0 {
                return Err(DeformError::BadDimension("D4", *n));
            }
            let mut op = LinearOperator::zero(*n);
            op.set(*n - 4, 2, Polynomial::one());
            op.set(*n - 3, 3, Polynomial::one());
            op.set(*n - 2, 4, Polynomial::one());
            op.set(*n - 1, 5, Polynomial::one());
            Ok(op)
        }
        DerivationSpec::Custom { op, .. } => Ok(op.clone()),
    }
}

/// The derivation choice used for the canonical deformation of dimension
/// `n`: `D3` everywhere except odd `n >= 11`, where `D4` is taken.
pub fn canonical_spec(n: usize) -> DerivationSpec {
    if n % 2 == 1 && n >= 11 {
        DerivationSpec::D4 { n }
    } else {
        DerivationSpec::D3 { n }
    }
}

/// Verdicts for the four hypotheses of the codimension-2 construction.
#[derive(Clone, Debug)]
pub struct HypothesisReport {
    /// Every bracket value lies in the ideal (i.e. `h` contains the
    /// commutator).
    pub commutator_in_ideal: bool,
    /// `D` is a derivation of `h`.
    pub derivation_ok: bool,
    /// `D ad(x_0) = ad(x_0) D` on `h`.
    pub commutes_with_ad_x0: bool,
    /// `mu(x_0, x_1)` has no `x_1` component (nilpotency-shape condition).
    pub bracket_x0x1_in_ideal_plus_x0: bool,
}

impl HypothesisReport {
    pub fn all_pass(&self) -> bool {
        self.commutator_in_ideal
            && self.derivation_ok
            && self.commutes_with_ad_x0
            && self.bracket_x0x1_in_ideal_plus_x0
    }
}

/// Check the hypotheses of the codimension-2 construction symbolically.
pub fn check_hypotheses(
    mu: &BilinearMap,
    split: &SubspaceSplit,
    d: &LinearOperator,
) -> HypothesisReport {
    let commutator_in_ideal = mu.entries().all(|(&(_, _, k), _)| split.in_ideal(k));
    let derivation_ok = is_derivation(d, mu, split).is_empty();
    let ad_x0 = ad(mu, split.x0);
    let commutes_with_ad_x0 = {
        // compare on columns inside the ideal, values also restricted there:
        // the definition only constrains the action inside h
        let defects = commutes_with(d, &ad_x0, &split.ideal);
        defects.iter().all(|(_, col)| {
            col.iter()
                .enumerate()
                .all(|(row, p)| p.is_zero() || split.in_ideal(row as u8))
        }) && defects.values().flatten().all(|p| p.is_zero())
    };
    let bracket_x0x1_in_ideal_plus_x0 = mu.coeff(split.x0, split.x1, split.x1).is_zero();
    HypothesisReport {
        commutator_in_ideal,
        derivation_ok,
        commutes_with_ad_x0,
        bracket_x0x1_in_ideal_plus_x0,
    }
}

/// Build `phi_D` from a derivation supported on the ideal. Fails when the
/// hypotheses do not hold.
pub fn phi_from_derivation(
    mu: &BilinearMap,
    split: &SubspaceSplit,
    d: &LinearOperator,
) -> Result<BilinearMap, DeformError> {
    if !d.supported_on(&split.ideal) {
        return Err(DeformError::HypothesisViolated(
            "operator not supported on the ideal".into(),
        ));
    }
    let report = check_hypotheses(mu, split, d);
    if !report.all_pass() {
        return Err(DeformError::HypothesisViolated(format!("{report:?}")));
    }
    let mut phi = BilinearMap::zero(mu.dim());
    for &h in &split.ideal {
        for (k, c) in d.column(h as usize).iter().enumerate() {
            if !c.is_zero() {
                phi.add_entry(split.x1, h, k as u8, c.clone());
            }
        }
    }
    Ok(phi)
}

/// A linear deformation: base bracket, direction, and the bracket with the
/// symbolic parameter `t`.
#[derive(Clone, Debug)]
pub struct Deformation {
    pub base: BilinearMap,
    pub direction: BilinearMap,
    pub deformed: BilinearMap,
}

impl Deformation {
    fn assemble(base: &BilinearMap, direction: &BilinearMap) -> Deformation {
        let t_dir = direction.scale_poly(&Polynomial::var(VarId::Time));
        let deformed = base.add(&t_dir).expect("same dimension");
        Deformation {
            base: base.clone(),
            direction: direction.clone(),
            deformed,
        }
    }

    /// Specialize the deformation parameter to a rational value.
    pub fn at_time(&self, t: &crate::exactalg::Rational) -> BilinearMap {
        let mut bindings = std::collections::BTreeMap::new();
        bindings.insert(VarId::Time, Polynomial::constant(t.clone()));
        self.deformed.substitute(&bindings)
    }
}

/// Codimension-2 deformation of `mu` along `phi_D`.
pub fn deform(
    mu: &BilinearMap,
    split: &SubspaceSplit,
    d: &LinearOperator,
) -> Result<Deformation, DeformError> {
    let phi = phi_from_derivation(mu, split, d)?;
    Ok(Deformation::assemble(mu, &phi))
}

/// Canonical deformation of a generic filiform bracket of dimension `n`.
pub fn canonical_deformation(mu: &BilinearMap) -> Result<Deformation, DeformError> {
    let n = mu.dim();
    let spec = canonical_spec(n);
    let d = derivation(&spec)?;
    deform(mu, &SubspaceSplit::standard(n), &d)
}

/// The Grunewald-O'Halloran construction: an ideal of codimension 1, an
/// element `x` outside it, and a derivation `D` of the ideal give the
/// deformation direction `phi_D(x, h) = D(h)`, `phi_D(h, h') = 0`.
pub fn gh_deform(
    mu: &BilinearMap,
    ideal: &[u8],
    x: u8,
    d: &LinearOperator,
) -> Result<Deformation, DeformError> {
    let n = mu.dim();
    assert_eq!(ideal.len(), n - 1, "ideal must have codimension 1");
    assert!(!ideal.contains(&x));
    // ideal closed under bracketing with everything
    for i in 0..n as u8 {
        for &h in ideal {
            if i == h {
                continue;
            }
            for (k, c) in mu.value(i, h).into_iter().enumerate() {
                if !c.is_zero() && !ideal.contains(&(k as u8)) {
                    return Err(DeformError::NotAnIdeal(i, h));
                }
            }
        }
    }
    if !d.supported_on(ideal) {
        return Err(DeformError::HypothesisViolated(
            "operator not supported on the ideal".into(),
        ));
    }
    // D must be a derivation of the ideal
    let split_like = SubspaceSplit {
        dim: n,
        x0: x,
        x1: x,
        ideal: ideal.to_vec(),
    };
    if let Some((&(i, j), _)) = is_derivation(d, mu, &split_like).iter().next() {
        return Err(DeformError::NotADerivation(i, j));
    }
    let mut phi = BilinearMap::zero(n);
    for &h in ideal {
        for (k, c) in d.column(h as usize).iter().enumerate() {
            if !c.is_zero() {
                phi.add_entry(x, h, k as u8, c.clone());
            }
        }
    }
    Ok(Deformation::assemble(mu, &phi))
}

/// Verification that a deformation is linear: the direction is a bracket
/// (`phi o phi = 0`), a 2-cocycle for the base, and the jacobiator of
/// `mu_t` equals that of `mu` identically in `t`.
#[derive(Clone, Debug)]
pub struct DeformationReport {
    pub direction_jacobi: TriForm,
    pub cocycle: TriForm,
    pub t_terms_vanish: bool,
}

impl DeformationReport {
    pub fn all_pass(&self) -> bool {
        self.direction_jacobi.is_zero() && self.cocycle.is_zero() && self.t_terms_vanish
    }
}

pub fn verify_linear_deformation(d: &Deformation) -> DeformationReport {
    let direction_jacobi = circ(&d.direction, &d.direction).expect("same dim");
    let cocycle = cocycle_defect(&d.base, &d.direction).expect("same dim");
    let jac_t = jacobiator(&d.deformed);
    let jac_0 = jacobiator(&d.base);
    // difference must vanish coefficient-wise in t
    let mut diff = jac_t;
    for (&(i, j, k, l), c) in jac_0.entries() {
        diff.add_entry(i, j, k, l, -c);
    }
    DeformationReport {
        direction_jacobi,
        cocycle,
        t_terms_vanish: diff.is_zero(),
    }
}

/// `phi_{D3} = psi[1, n-3]` and (odd `n`) `phi_{D4} = psi[1, n-4]`: the
/// deformation directions are Vergne basis cocycles, so an adapted basis
/// for `mu` stays adapted for `mu_t`.
pub fn direction_is_vergne_cocycle(n: usize, spec: &DerivationSpec) -> Result<bool, DeformError> {
    let d = derivation(spec)?;
    let model = crate::vergne::generic_filiform(n);
    let phi = phi_from_derivation(&model.mu, &SubspaceSplit::standard(n), &d)?;
    let s = match spec {
        DerivationSpec::D3 { .. } => n - 3,
        DerivationSpec::D4 { .. } => n - 4,
        DerivationSpec::Custom { .. } => return Ok(false),
    };
    // psi[1, n-3] sits outside Delta_6, and psi[1, n-4] outside Delta_7;
    // the identity is about the formula, not the parametrizing index set.
    Ok(phi == crate::vergne::psi_formula(n, 1, s as u8))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Rational;
    use crate::vergne::{generic_filiform, mu0, psi};

    #[test]
    fn d3_shape_dim9() {
        let d = derivation(&DerivationSpec::D3 { n: 9 }).unwrap();
        assert_eq!(*d.get(6, 2), Polynomial::one());
        assert_eq!(*d.get(7, 3), Polynomial::one());
        assert_eq!(*d.get(8, 4), Polynomial::one());
        assert!(d.get(5, 2).is_zero());
        // nilpotency: D3 shifts indices past n - 1 in two steps when n >= 9
        let sq = d.compose(&d);
        assert!(sq.is_zero());
    }

    #[test]
    fn d4_requires_odd_dimension() {
        assert!(derivation(&DerivationSpec::D4 { n: 10 }).is_err());
        assert!(derivation(&DerivationSpec::D4 { n: 7 }).is_ok());
        let d = derivation(&DerivationSpec::D4 { n: 11 }).unwrap();
        assert_eq!(*d.get(7, 2), Polynomial::one());
        assert_eq!(*d.get(10, 5), Polynomial::one());
    }

    #[test]
    fn canonical_choice_table() {
        assert_eq!(canonical_spec(8).name(), "D3");
        assert_eq!(canonical_spec(9).name(), "D3");
        assert_eq!(canonical_spec(10).name(), "D3");
        assert_eq!(canonical_spec(11).name(), "D4");
        assert_eq!(canonical_spec(12).name(), "D3");
        assert_eq!(canonical_spec(13).name(), "D4");
    }

    #[test]
    fn hypotheses_pass_for_d3_generic() {
        for n in 6..=13 {
            let model = generic_filiform(n);
            let split = SubspaceSplit::standard(n);
            let d = derivation(&DerivationSpec::D3 { n }).unwrap();
            let report = check_hypotheses(&model.mu, &split, &d);
            assert!(
                report.all_pass(),
                "D3 hypotheses fail for n = {n}: {report:?}"
            );
        }
    }

    #[test]
    fn hypotheses_pass_for_d4_generic_odd() {
        for n in [7usize, 9, 11, 13] {
            let model = generic_filiform(n);
            let split = SubspaceSplit::standard(n);
            let d = derivation(&DerivationSpec::D4 { n }).unwrap();
            let report = check_hypotheses(&model.mu, &split, &d);
            assert!(
                report.all_pass(),
                "D4 hypotheses fail for n = {n}: {report:?}"
            );
        }
    }

    #[test]
    fn non_commuting_operator_rejected() {
        // x_2 -> x_2 does not commute with ad(x_0) on mu0 (ad x_0 shifts)
        let n = 9;
        let split = SubspaceSplit::standard(n);
        let mut d = LinearOperator::zero(n);
        d.set(2, 2, Polynomial::one());
        let report = check_hypotheses(&mu0(n), &split, &d);
        assert!(report.derivation_ok); // h is abelian for mu0
        assert!(!report.commutes_with_ad_x0);
        assert!(phi_from_derivation(&mu0(n), &split, &d).is_err());
    }

    #[test]
    fn phi_d3_is_vergne_cocycle() {
        for n in 6..=13 {
            assert!(direction_is_vergne_cocycle(n, &DerivationSpec::D3 { n }).unwrap());
        }
        for n in [7usize, 9, 11, 13] {
            assert!(direction_is_vergne_cocycle(n, &DerivationSpec::D4 { n }).unwrap());
        }
    }

    #[test]
    fn zero_derivation_gives_base_back() {
        let model = generic_filiform(9);
        let split = SubspaceSplit::standard(9);
        let d = LinearOperator::zero(9);
        let def = deform(&model.mu, &split, &d).unwrap();
        assert!(def.direction.is_zero());
        assert_eq!(def.deformed, model.mu);
    }

    #[test]
    fn canonical_deformation_dim9_direction() {
        let model = generic_filiform(9);
        let def = canonical_deformation(&model.mu).unwrap();
        assert_eq!(def.direction, psi(9, 1, 6).unwrap());
        // deformed coefficient at (1,2)->6 gains the t term
        let c = def.deformed.coeff(1, 2, 6);
        assert_eq!(c, &model.mu.coeff(1, 2, 6) + &Polynomial::var(VarId::Time));
    }

    #[test]
    fn verify_canonical_deformations_generic() {
        for n in [9usize, 10, 11] {
            let model = generic_filiform(n);
            let def = canonical_deformation(&model.mu).unwrap();
            let report = verify_linear_deformation(&def);
            assert!(report.all_pass(), "canonical deformation fails for n = {n}");
        }
    }

    #[test]
    fn bad_direction_fails_verification() {
        // phi(x1,x2) = x3 on mu0 is not a cocycle for n >= 5
        let n = 6;
        let mut phi = BilinearMap::zero(n);
        phi.add_entry(1, 2, 3, Polynomial::one());
        let base = mu0(n);
        let def = Deformation::assemble(&base, &phi);
        let report = verify_linear_deformation(&def);
        assert!(!report.all_pass());
        assert!(!report.cocycle.is_zero());
        // the defect shows up at the triple (0,1,2)
        assert!(!report.cocycle.coeff(0, 1, 2, 3).is_zero() || report.cocycle.num_entries() > 0);
    }

    #[test]
    fn gh_identity_derivation_on_mu0() {
        // ideal <x_1..x_{n-1}> is abelian for mu0; identity on it is a derivation
        let n = 7;
        let base = mu0(n);
        let ideal: Vec<u8> = (1..n as u8).collect();
        let mut d = LinearOperator::zero(n);
        for &h in &ideal {
            d.set(h as usize, h as usize, Polynomial::one());
        }
        let def = gh_deform(&base, &ideal, 0, &d).unwrap();
        // mu_t(x_0, x_j) = x_{j+1} + t x_j
        for j in 1..(n - 1) as u8 {
            assert_eq!(def.deformed.coeff(0, j, j + 1), Polynomial::one());
            assert_eq!(def.deformed.coeff(0, j, j), Polynomial::var(VarId::Time));
        }
        assert!(verify_linear_deformation(&def).all_pass());
    }

    #[test]
    fn gh_solvable_example() {
        // mu(x0, x1) = x0 plus abelian <x_2..>: the codimension-1 ideal
        // <x_0, x_2, ..., x_{n-1}> is abelian, so any D supported on the
        // x_2.. part is a derivation, and mu_t(x1, h) = t D(h).
        let n = 6;
        let mut base = BilinearMap::zero(n);
        base.add_entry(0, 1, 0, Polynomial::one());
        let mut ideal: Vec<u8> = vec![0];
        ideal.extend(2..n as u8);
        let mut d = LinearOperator::zero(n);
        for h in 2..n as u8 {
            d.set(h as usize, h as usize, Polynomial::int(2));
        }
        let def = gh_deform(&base, &ideal, 1, &d).unwrap();
        for h in 2..n as u8 {
            assert_eq!(
                def.deformed.coeff(1, h, h),
                Polynomial::var(VarId::Time).scale(&Rational::from(2))
            );
        }
        assert_eq!(def.deformed.coeff(0, 1, 0), Polynomial::one());
        assert!(verify_linear_deformation(&def).all_pass());
    }

    #[test]
    fn gh_rejects_non_ideal() {
        let n = 6;
        let base = mu0(n);
        // <x_0, x_2, x_3, x_4> minus... take indices {0,2,3,4,5}: bracket
        // (0,2) = x_3 stays, but (0,1) irrelevant; (0,5) = 0. Use x = 1.
        // mu0(x_0, x_2) = x_3 in the set, mu0(x_0, x_4) = x_5 in the set,
        // but mu0(x_1, ...) with x_1 outside: bracket (1, h) = 0. This IS an
        // ideal, so instead drop x_5 to break closure: {0,2,3,4} u {1}? n-1
        // indices needed. Use {0,1,2,3,4}: bracket (0,4) = x_5 outside.
        let ideal: Vec<u8> = vec![0, 1, 2, 3, 4];
        let d = LinearOperator::zero(n);
        assert!(matches!(
            gh_deform(&base, &ideal, 5, &d),
            Err(DeformError::NotAnIdeal(0, 4))
        ));
    }

    #[test]
    fn gh_rejects_non_derivation() {
        // on the generic bracket the codimension-1 ideal <x_1..x_{n-1}> is
        // not abelian, so the identity map on it is not a derivation
        let model = generic_filiform(7);
        let ideal: Vec<u8> = (1..7u8).collect();
        let mut d = LinearOperator::zero(7);
        for &h in &ideal {
            d.set(h as usize, h as usize, Polynomial::one());
        }
        assert!(matches!(
            gh_deform(&model.mu, &ideal, 0, &d),
            Err(DeformError::NotADerivation(1, 2))
        ));
    }

    #[test]
    fn specialization_at_time_zero_is_base() {
        let model = generic_filiform(10);
        let def = canonical_deformation(&model.mu).unwrap();
        assert_eq!(def.at_time(&Rational::zero()), model.mu);
    }
}

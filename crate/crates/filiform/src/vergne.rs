//! The Vergne parametrization of filiform Lie algebras.
//!
//! Every filiform bracket of dimension `n` has an adapted basis in which it
//! takes the form `mu = mu0 + sum a[r,s] * psi[r,s]` over the index set
//! `Delta_n`, where `mu0` is the standard filiform bracket and the
//! `psi[r,s]` are particular 2-cocycles of `mu0`:
//!
//! ```text
//! psi[r,s](x_i, x_j) = (-1)^(r-i) * C(j-r-1, r-i) * x_{i+j+s-2r-1}
//! ```
//!
//! for `1 <= i <= r < j <= n-1` with the target index at most `n-1`, and
//! zero otherwise.

use crate::exactalg::{Polynomial, Rational, VarId};
use crate::liecore::BilinearMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VergneError {
    #[error("index ({0},{1}) is not in Delta_{2}")]
    IndexNotInDelta(u8, u8, usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("point has {0} values but Delta_{1} has {2}")]
    LengthMismatch(usize, usize, usize),
    #[error("dimension {0} not supported ({1})")]
    BadDimension(usize, &'static str),
}

/// Binomial coefficient with the convention `C(a, b) = 0` for `b < 0` or
/// `b > a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || b > a || a < 0 {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..b {
        num *= a - i;
        den *= i + 1;
    }
    num / den
}

/// The index set `Delta_n` in lexicographic order: all `(r, s)` with
/// `1 <= r <= n-2` and `2r+1 < s <= n-1`, plus `((n-2)/2, n-1)` when `n` is
/// even.
pub fn delta_set(n: usize) -> Vec<(u8, u8)> {
    assert!(n >= 3, "Delta_n needs n >= 3");
    let mut out: Vec<(u8, u8)> = Vec::new();
    for r in 1..=(n - 2) {
        for s in (2 * r + 2)..=(n - 1) {
            out.push((r as u8, s as u8));
        }
    }
    if n.is_multiple_of(2) {
        out.push((((n - 2) / 2) as u8, (n - 1) as u8));
    }
    out.sort_unstable();
    out
}

/// The standard filiform bracket: `mu0(x_0, x_j) = x_{j+1}` for
/// `1 <= j <= n-2`, all other basis brackets zero.
pub fn mu0(n: usize) -> BilinearMap {
    assert!(n >= 3);
    let mut m = BilinearMap::zero(n);
    for j in 1..=(n - 2) {
        m.add_entry(0, j as u8, (j + 1) as u8, Polynomial::one());
    }
    m
}

/// The basis 2-cocycle `psi[r,s]` of dimension `n`; requires `(r,s)` in
/// `Delta_n`.
pub fn psi(n: usize, r: u8, s: u8) -> Result<BilinearMap, VergneError> {
    if !delta_set(n).contains(&(r, s)) {
        return Err(VergneError::IndexNotInDelta(r, s, n));
    }
    Ok(psi_formula(n, r, s))
}

/// The defining formula of `psi[r,s]` for arbitrary `(r, s)`, without the
/// `Delta_n` membership gate. (The deformation directions `psi[1, n-3]` and
/// `psi[1, n-4]` fall outside `Delta_n` for the smallest dimensions.)
pub fn psi_formula(n: usize, r: u8, s: u8) -> BilinearMap {
    let mut m = BilinearMap::zero(n);
    let (r_i, s_i) = (r as i64, s as i64);
    for i in 1..=r_i {
        for j in (r_i + 1)..=(n as i64 - 1) {
            let k = i + j + s_i - 2 * r_i - 1;
            if k > n as i64 - 1 {
                continue;
            }
            let b = binomial(j - r_i - 1, r_i - i);
            if b.is_zero() {
                continue;
            }
            let sign = if (r_i - i) % 2 == 0 { 1 } else { -1 };
            let coeff = Rational::from_big(num_rational::BigRational::from(b * sign));
            m.add_entry(i as u8, j as u8, k as u8, Polynomial::constant(coeff));
        }
    }
    m
}

/// The generic filiform bracket of dimension `n`, with one symbolic
/// parameter `a[r,s]` per element of `Delta_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VergneModel {
    pub n: usize,
    pub delta: Vec<(u8, u8)>,
    pub mu: BilinearMap,
}

/// Build `mu = mu0 + sum a[r,s] psi[r,s]`.
pub fn generic_filiform(n: usize) -> VergneModel {
    let delta = delta_set(n);
    let mut mu = mu0(n);
    for &(r, s) in &delta {
        let base = psi(n, r, s).expect("delta indices are valid");
        let coeff = Polynomial::var(VarId::param(r, s));
        mu = mu.add(&base.scale_poly(&coeff)).expect("same dimension");
    }
    VergneModel { n, delta, mu }
}

/// Only the cocycle part `psi = sum a[r,s] psi[r,s]` (no `mu0`).
pub fn generic_psi(n: usize) -> BilinearMap {
    let mut acc = BilinearMap::zero(n);
    for (r, s) in delta_set(n) {
        let base = psi(n, r, s).expect("delta indices are valid");
        let coeff = Polynomial::var(VarId::param(r, s));
        acc = acc.add(&base.scale_poly(&coeff)).expect("same dimension");
    }
    acc
}

/// A rational point of the parameter space: one value per element of
/// `Delta_n`, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiliformPoint {
    pub n: usize,
    pub values: Vec<Rational>,
}

impl FiliformPoint {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self, VergneError> {
        let expect = delta_set(n).len();
        if values.len() != expect {
            return Err(VergneError::LengthMismatch(values.len(), n, expect));
        }
        Ok(FiliformPoint { n, values })
    }

    pub fn parse(n: usize, literals: &[&str]) -> Result<Self, VergneError> {
        let values: Vec<Rational> = literals
            .iter()
            .map(|s| s.parse().expect("rational literal"))
            .collect();
        FiliformPoint::new(n, values)
    }

    /// Variable assignment `a[r,s] -> value`.
    pub fn assignment(&self) -> BTreeMap<VarId, Rational> {
        delta_set(self.n)
            .into_iter()
            .zip(self.values.iter().cloned())
            .map(|((r, s), v)| (VarId::param(r, s), v))
            .collect()
    }

    pub fn value_of(&self, r: u8, s: u8) -> Option<&Rational> {
        delta_set(self.n)
            .iter()
            .position(|&p| p == (r, s))
            .map(|idx| &self.values[idx])
    }
}

/// Replace every parameter by its rational value, yielding a constant
/// bracket.
pub fn specialize(model: &VergneModel, point: &FiliformPoint) -> Result<BilinearMap, VergneError> {
    if model.n != point.n {
        return Err(VergneError::DimMismatch(model.n, point.n));
    }
    if point.values.len() != model.delta.len() {
        return Err(VergneError::LengthMismatch(
            point.values.len(),
            model.n,
            model.delta.len(),
        ));
    }
    let bindings: BTreeMap<VarId, Polynomial> = model
        .delta
        .iter()
        .zip(point.values.iter())
        .map(|(&(r, s), v)| (VarId::param(r, s), Polynomial::constant(v.clone())))
        .collect();
    Ok(model.mu.substitute(&bindings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_poly;
    use crate::liecore::{jacobiator, lower_central_series};

    #[test]
    fn delta_sets_match_known_sizes() {
        assert_eq!(
            delta_set(9),
            vec![
                (1, 4),
                (1, 5),
                (1, 6),
                (1, 7),
                (1, 8),
                (2, 6),
                (2, 7),
                (2, 8),
                (3, 8)
            ]
        );
        let d10 = delta_set(10);
        assert_eq!(d10.len(), 13);
        assert!(d10.contains(&(4, 9)));
        assert_eq!(delta_set(11).len(), 16);
    }

    #[test]
    fn delta_size_closed_form() {
        // |Delta_n| = sum_r max(0, n-1-(2r+1)) + [n even]
        for n in 3..=13 {
            let closed: usize = (1..=n - 2)
                .map(|r| (n as i64 - 1 - (2 * r as i64 + 1)).max(0) as usize)
                .sum::<usize>()
                + usize::from(n % 2 == 0);
            assert_eq!(delta_set(n).len(), closed, "n = {n}");
        }
    }

    #[test]
    fn psi_sample_values() {
        let p14 = psi(9, 1, 4).unwrap();
        assert_eq!(p14.coeff(1, 2, 4), Polynomial::one());
        let p26 = psi(9, 2, 6).unwrap();
        assert_eq!(p26.coeff(1, 4, 6), Polynomial::int(-1));
        let p38 = psi(9, 3, 8).unwrap();
        assert_eq!(p38.coeff(3, 4, 8), Polynomial::one());
        assert!(psi(9, 4, 9).is_err());
    }

    #[test]
    fn psi_support_bounds() {
        for n in 4..=13usize {
            for (r, s) in delta_set(n) {
                let m = psi(n, r, s).unwrap();
                for (&(i, j, k), _) in m.entries() {
                    assert!(1 <= i && i <= r && r < j && (j as usize) < n);
                    assert_eq!(k as i64, i as i64 + j as i64 + s as i64 - 2 * r as i64 - 1);
                }
            }
        }
    }

    #[test]
    fn mu0_properties() {
        let m = mu0(9);
        assert_eq!(m.num_entries(), 7);
        assert!(jacobiator(&m).is_zero());
        assert_eq!(
            lower_central_series(&m).unwrap(),
            vec![9, 7, 6, 5, 4, 3, 2, 1, 0]
        );
    }

    #[test]
    fn generic_brackets_match_published_tables() {
        // dimension 9 row: mu(x1, x6) = (a14 - 3 a26 + a38) x8
        let m9 = generic_filiform(9);
        assert_eq!(
            m9.mu.coeff(1, 6, 8),
            parse_poly("a[1,4] - 3*a[2,6] + a[3,8]").unwrap()
        );
        // dimension 10 row: mu(x1, x8) = -a49 x9
        let m10 = generic_filiform(10);
        assert_eq!(m10.mu.coeff(1, 8, 9), parse_poly("-a[4,9]").unwrap());
        // dimension 11 row: mu(x4, x5) = a4_10 x10
        let m11 = generic_filiform(11);
        assert_eq!(m11.mu.coeff(4, 5, 10), parse_poly("a[4,10]").unwrap());
    }

    #[test]
    fn specialize_zero_point_gives_mu0() {
        let model = generic_filiform(9);
        let zero = FiliformPoint::new(9, vec![Rational::zero(); 9]).unwrap();
        assert_eq!(specialize(&model, &zero).unwrap(), mu0(9));
    }

    #[test]
    fn specialize_dim9_theorem_point() {
        let model = generic_filiform(9);
        let pt = FiliformPoint::parse(9, &["1", "-1", "0", "0", "0", "1", "1", "0", "1"]).unwrap();
        let mu = specialize(&model, &pt).unwrap();
        // mu(x2, x3) = a26 x6 + a27 x7 + a28 x8 = x6 + x7
        assert_eq!(mu.coeff(2, 3, 6), Polynomial::one());
        assert_eq!(mu.coeff(2, 3, 7), Polynomial::one());
        assert_eq!(mu.coeff(2, 3, 8), Polynomial::zero());
        assert!(jacobiator(&mu).is_zero());
    }

    #[test]
    fn point_length_checked() {
        assert!(matches!(
            FiliformPoint::new(9, vec![Rational::zero(); 8]),
            Err(VergneError::LengthMismatch(8, 9, 9))
        ));
    }

    #[test]
    fn structure_bounds_of_generic_bracket() {
        for n in 6..=13usize {
            let model = generic_filiform(n);
            let half = (n - 2) / 2;
            // mu(x_0, x_j) = x_{j+1}
            for j in 1..=(n - 2) as u8 {
                for k in 0..n as u8 {
                    let expected = if k == j + 1 {
                        Polynomial::one()
                    } else {
                        Polynomial::zero()
                    };
                    assert_eq!(model.mu.coeff(0, j, k), expected);
                }
            }
            for (&(i, j, k), _) in model.mu.entries() {
                if i == 0 {
                    continue;
                }
                let (i, j, k) = (i as usize, j as usize, k as usize);
                // brackets of two high indices vanish
                assert!(
                    !(half < i && i < j),
                    "mu(x_{i}, x_{j}) must vanish (n = {n})"
                );
                if n % 2 == 1 {
                    assert!(k > i + j, "odd n = {n}: target below i+j+1");
                } else {
                    assert!(k >= i + j, "even n = {n}: target below i+j");
                    if k == i + j {
                        assert!(1 <= i && i <= half && half < j && j < n);
                    }
                }
            }
        }
    }
}

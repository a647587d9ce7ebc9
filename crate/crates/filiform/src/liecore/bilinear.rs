//! Alternating bilinear maps with polynomial-valued structure constants.

use crate::exactalg::{parse_poly, Polynomial, Rational, VarId};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use super::LieError;

/// An alternating bilinear map on an `n`-dimensional space with basis
/// `x_0 .. x_{n-1}`. Only pairs `i < j` are stored; the value at `(j, i)` is
/// the negation. Coefficients are polynomials (constants are the special
/// case of a specialized bracket).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearMap {
    dim: usize,
    // (i, j, k) -> coefficient of x_k in value(x_i, x_j), i < j, nonzero only
    coeffs: BTreeMap<(u8, u8, u8), Polynomial>,
}

impl BilinearMap {
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1 && dim <= u8::MAX as usize);
        BilinearMap {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(u8, u8, u8), &Polynomial)> {
        self.coeffs.iter()
    }

    pub fn num_entries(&self) -> usize {
        self.coeffs.len()
    }

    /// Add `c * x_k` to the value at `(x_i, x_j)`. Indices `i > j` are
    /// normalized through alternation; `i == j` must have zero value.
    pub fn add_entry(&mut self, i: u8, j: u8, k: u8, c: Polynomial) {
        assert!((i as usize) < self.dim && (j as usize) < self.dim && (k as usize) < self.dim);
        if c.is_zero() {
            return;
        }
        assert!(i != j, "diagonal value of an alternating map must be zero");
        let (key, val) = if i < j {
            ((i, j, k), c)
        } else {
            ((j, i, k), -&c)
        };
        let entry = self.coeffs.entry(key).or_default();
        *entry = &*entry + &val;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    /// Coefficient of `x_k` in the value at `(x_i, x_j)` (any order of i, j).
    pub fn coeff(&self, i: u8, j: u8, k: u8) -> Polynomial {
        if i == j {
            return Polynomial::zero();
        }
        if i < j {
            self.coeffs.get(&(i, j, k)).cloned().unwrap_or_default()
        } else {
            self.coeffs.get(&(j, i, k)).map(|p| -p).unwrap_or_default()
        }
    }

    /// Dense value vector of `(x_i, x_j)`.
    pub fn value(&self, i: u8, j: u8) -> Vec<Polynomial> {
        let mut out = vec![Polynomial::zero(); self.dim];
        if i == j {
            return out;
        }
        let (a, b, sign) = if i < j { (i, j, false) } else { (j, i, true) };
        for (&(p, q, k), c) in self.coeffs.range((a, b, 0)..=(a, b, u8::MAX)) {
            debug_assert_eq!((p, q), (a, b));
            out[k as usize] = if sign { -c } else { c.clone() };
        }
        out
    }

    /// Bilinear extension to vectors with polynomial coordinates.
    pub fn apply(&self, u: &[Polynomial], v: &[Polynomial]) -> Vec<Polynomial> {
        assert_eq!(u.len(), self.dim);
        assert_eq!(v.len(), self.dim);
        let mut out = vec![Polynomial::zero(); self.dim];
        for (&(i, j, k), c) in &self.coeffs {
            let (i, j, k) = (i as usize, j as usize, k as usize);
            // coefficient of the (i,j) pair in u (x) v, antisymmetrized
            let cross = &(&u[i] * &v[j]) - &(&u[j] * &v[i]);
            if cross.is_zero() {
                continue;
            }
            out[k] = &out[k] + &(&cross * c);
        }
        out
    }

    pub fn add(&self, other: &BilinearMap) -> Result<BilinearMap, LieError> {
        if self.dim != other.dim {
            return Err(LieError::DimMismatch(self.dim, other.dim));
        }
        let mut out = self.clone();
        for (&(i, j, k), c) in &other.coeffs {
            out.add_entry(i, j, k, c.clone());
        }
        Ok(out)
    }

    /// Multiply every coefficient by a fixed polynomial (e.g. `t`).
    pub fn scale_poly(&self, factor: &Polynomial) -> BilinearMap {
        if factor.is_zero() {
            return BilinearMap::zero(self.dim);
        }
        BilinearMap {
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&key, c)| (key, c * factor))
                .collect(),
        }
    }

    /// Substitute polynomials for variables in every coefficient.
    pub fn substitute(&self, bindings: &BTreeMap<VarId, Polynomial>) -> BilinearMap {
        let mut out = BilinearMap::zero(self.dim);
        for (&(i, j, k), c) in &self.coeffs {
            out.add_entry(i, j, k, c.substitute(bindings));
        }
        out
    }

    pub fn has_constant_coeffs(&self) -> bool {
        self.coeffs.values().all(Polynomial::is_constant)
    }

    /// Structure constants as exact rationals; requires constant coefficients.
    pub fn constant_tensor(&self) -> Result<Vec<(u8, u8, u8, Rational)>, LieError> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (&(i, j, k), c) in &self.coeffs {
            let val = c
                .as_constant()
                .ok_or_else(|| LieError::NonConstantCoefficients(format!("({i},{j})->{k}")))?;
            out.push((i, j, k, val));
        }
        Ok(out)
    }
}

/// Serialized form: `{dim, entries: [{i, j, k, poly}]}` with canonical
/// polynomial strings, sorted by `(i, j, k)`.
#[derive(Serialize, Deserialize)]
struct BilinearMapJson {
    dim: usize,
    entries: Vec<EntryJson>,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    i: u8,
    j: u8,
    k: u8,
    poly: String,
}

impl Serialize for BilinearMap {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        BilinearMapJson {
            dim: self.dim,
            entries: self
                .coeffs
                .iter()
                .map(|(&(i, j, k), c)| EntryJson {
                    i,
                    j,
                    k,
                    poly: c.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BilinearMap {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = BilinearMapJson::deserialize(deserializer)?;
        let mut map = BilinearMap::zero(raw.dim);
        for e in raw.entries {
            let poly = parse_poly(&e.poly).map_err(serde::de::Error::custom)?;
            if e.i >= e.j {
                return Err(serde::de::Error::custom("entries must have i < j"));
            }
            map.add_entry(e.i, e.j, e.k, poly);
        }
        Ok(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternation_is_implicit() {
        let mut m = BilinearMap::zero(4);
        m.add_entry(0, 1, 2, Polynomial::one());
        assert_eq!(m.coeff(1, 0, 2), Polynomial::int(-1));
        m.add_entry(2, 1, 3, Polynomial::one()); // stored as (1,2,3) negated
        assert_eq!(m.coeff(1, 2, 3), Polynomial::int(-1));
    }

    #[test]
    fn json_roundtrip_is_bit_exact() {
        let mut m = BilinearMap::zero(5);
        m.add_entry(0, 1, 2, Polynomial::one());
        m.add_entry(1, 2, 4, parse_poly("a[1,4] - 1/2*a[2,6]").unwrap());
        let json = serde_json::to_string(&m).unwrap();
        let back: BilinearMap = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}

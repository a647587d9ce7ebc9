//! Alternating trilinear tables (values of the cyclic composition).

use crate::exactalg::Polynomial;
use std::collections::BTreeMap;

/// Coefficient table of an alternating trilinear map: only strictly
/// increasing triples `i < j < k` are stored, with the coefficient of `x_l`
/// in the value at `(x_i, x_j, x_k)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TriForm {
    dim: usize,
    coeffs: BTreeMap<(u8, u8, u8, u8), Polynomial>,
}

impl TriForm {
    pub fn zero(dim: usize) -> Self {
        TriForm {
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

    pub fn num_entries(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add_entry(&mut self, i: u8, j: u8, k: u8, l: u8, c: Polynomial) {
        assert!(i < j && j < k, "triples must be strictly increasing");
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry((i, j, k, l)).or_default();
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.coeffs.remove(&(i, j, k, l));
        }
    }

    pub fn coeff(&self, i: u8, j: u8, k: u8, l: u8) -> Polynomial {
        self.coeffs.get(&(i, j, k, l)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(u8, u8, u8, u8), &Polynomial)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &TriForm) -> TriForm {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (&(i, j, k, l), c) in &other.coeffs {
            out.add_entry(i, j, k, l, c.clone());
        }
        out
    }

    /// All nonzero coefficient polynomials, in key order.
    pub fn coefficients(&self) -> impl Iterator<Item = &Polynomial> {
        self.coeffs.values()
    }
}

//! The isomorphism defect equations `E[i,j]^k`.
//!
//! For a candidate isomorphism `g` from `mu_t` to `mu`,
//!
//! ```text
//! E[i,j] = g(mu_t(x_i, x_j)) - mu(g x_i, g x_j)
//! ```
//!
//! and `g` is an isomorphism exactly when every coefficient `E[i,j]^k`
//! vanishes. The coefficients are polynomials in the matrix entries
//! `m[i,j]`, the parameters `a[r,s]`, and `t`.

use super::matrix::IsoMatrix;
use crate::exactalg::Polynomial;
use crate::liecore::BilinearMap;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Label of one scalar defect equation.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct EqLabel {
    pub i: u8,
    pub j: u8,
    pub k: u8,
}

impl EqLabel {
    pub fn new(i: u8, j: u8, k: u8) -> Self {
        assert!(i < j);
        EqLabel { i, j, k }
    }
}

impl fmt::Display for EqLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[{},{}]^{}", self.i, self.j, self.k)
    }
}

/// All nonzero defect coefficients of `g` as a map `E[i,j]^k -> polynomial`.
pub fn iso_defect(
    mu_t: &BilinearMap,
    mu: &BilinearMap,
    g: &IsoMatrix,
) -> Result<BTreeMap<EqLabel, Polynomial>, super::matrix::IsoError> {
    let n = mu.dim();
    if mu_t.dim() != n {
        return Err(super::matrix::IsoError::DimMismatch(mu_t.dim(), n));
    }
    if g.dim() != n {
        return Err(super::matrix::IsoError::DimMismatch(g.dim(), n));
    }
    let images: Vec<Vec<Polynomial>> = (0..n).map(|j| g.basis_image(j)).collect();
    let mut out = BTreeMap::new();
    for i in 0..n as u8 {
        for j in (i + 1)..n as u8 {
            let lhs = g.apply(&mu_t.value(i, j));
            let rhs = mu.apply(&images[i as usize], &images[j as usize]);
            for k in 0..n {
                let diff = &lhs[k] - &rhs[k];
                if !diff.is_zero() {
                    out.insert(EqLabel::new(i, j, k as u8), diff);
                }
            }
        }
    }
    Ok(out)
}

/// The full defect listing in canonical text and label order, for export.
#[derive(Clone, Debug, Serialize)]
pub struct EquationExport {
    pub n: usize,
    pub stage: String,
    pub derivation: String,
    /// Present when the dimension ships without a certified elimination
    /// script.
    pub warning: Option<String>,
    pub equations: Vec<ExportedEquation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExportedEquation {
    pub label: String,
    pub poly: String,
    pub latex: String,
}

impl EquationExport {
    pub fn from_defects(
        n: usize,
        stage: &str,
        derivation: &str,
        warning: Option<String>,
        defects: &BTreeMap<EqLabel, Polynomial>,
    ) -> Self {
        EquationExport {
            n,
            stage: stage.to_string(),
            derivation: derivation.to_string(),
            warning,
            equations: defects
                .iter()
                .map(|(label, poly)| ExportedEquation {
                    label: label.to_string(),
                    poly: poly.to_string(),
                    latex: poly.latex(),
                })
                .collect(),
        }
    }
}

//! Bilinear maps as structure tensors, the cyclic trilinear composition, and
//! the Jacobi / cocycle / derivation machinery built on it.
//!
//! For alternating bilinear maps `psi`, `phi` the composition is
//!
//! ```text
//! (psi o phi)(X, Y, Z) = psi(phi(X,Y), Z) + psi(phi(Y,Z), X) + psi(phi(Z,X), Y)
//! ```
//!
//! A bracket `mu` satisfies the Jacobi identity iff `mu o mu = 0`, and `phi`
//! is a 2-cocycle for `mu` iff `mu o phi + phi o mu = 0`.

mod bilinear;
mod operator;
mod series;
mod triform;

pub use bilinear::BilinearMap;
pub use operator::{LinearOperator, SubspaceSplit};
pub use series::{is_filiform, lower_central_series};
pub use triform::TriForm;

use crate::exactalg::Polynomial;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("non-constant coefficient at {0}")]
    NonConstantCoefficients(String),
}

/// The cyclic trilinear composition `psi o phi`.
pub fn circ(psi: &BilinearMap, phi: &BilinearMap) -> Result<TriForm, LieError> {
    let n = psi.dim();
    if phi.dim() != n {
        return Err(LieError::DimMismatch(n, phi.dim()));
    }
    let mut out = TriForm::zero(n);
    for i in 0..n as u8 {
        for j in (i + 1)..n as u8 {
            for k in (j + 1)..n as u8 {
                // psi(phi(x_i,x_j), x_k) + psi(phi(x_j,x_k), x_i) + psi(phi(x_k,x_i), x_j)
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    let inner = phi.value(a, b);
                    for (l, coeff) in inner.iter().enumerate() {
                        if coeff.is_zero() {
                            continue;
                        }
                        let outer = psi.value(l as u8, c);
                        for (m, val) in outer.iter().enumerate() {
                            if val.is_zero() {
                                continue;
                            }
                            out.add_entry(i, j, k, m as u8, coeff * val);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `mu o mu`; zero exactly when `mu` satisfies the Jacobi identity.
pub fn jacobiator(mu: &BilinearMap) -> TriForm {
    circ(mu, mu).expect("equal dimensions")
}

/// `mu o phi + phi o mu`; zero exactly when `phi` is a 2-cocycle for `mu`.
pub fn cocycle_defect(mu: &BilinearMap, phi: &BilinearMap) -> Result<TriForm, LieError> {
    Ok(circ(mu, phi)?.add(&circ(phi, mu)?))
}

/// The adjoint operator `ad(x_i): x |-> mu(x_i, x)`.
pub fn ad(mu: &BilinearMap, i: u8) -> LinearOperator {
    let n = mu.dim();
    let mut op = LinearOperator::zero(n);
    for j in 0..n as u8 {
        if j == i {
            continue;
        }
        for (k, c) in mu.value(i, j).into_iter().enumerate() {
            if !c.is_zero() {
                op.set(k, j as usize, c);
            }
        }
    }
    op
}

/// Derivation defect of `d` on the ideal part of `split`:
/// `d(mu(h, h')) - mu(d h, h') - mu(h, d h')` over ideal pairs `h < h'`.
/// An empty table means `d` is a derivation of the ideal.
pub fn is_derivation(
    d: &LinearOperator,
    mu: &BilinearMap,
    split: &SubspaceSplit,
) -> BTreeMap<(u8, u8), Vec<Polynomial>> {
    let n = mu.dim();
    let mut defects = BTreeMap::new();
    let basis = |idx: u8| -> Vec<Polynomial> {
        let mut v = vec![Polynomial::zero(); n];
        v[idx as usize] = Polynomial::one();
        v
    };
    for (pos, &h) in split.ideal.iter().enumerate() {
        for &h2 in &split.ideal[pos + 1..] {
            let (h, h2) = if h < h2 { (h, h2) } else { (h2, h) };
            let lhs = d.apply(&mu.value(h, h2));
            let r1 = mu.apply(&d.apply(&basis(h)), &basis(h2));
            let r2 = mu.apply(&basis(h), &d.apply(&basis(h2)));
            let defect: Vec<Polynomial> = lhs
                .iter()
                .zip(r1.iter().zip(r2.iter()))
                .map(|(a, (b, c))| &(a - b) - c)
                .collect();
            if defect.iter().any(|p| !p.is_zero()) {
                defects.insert((h, h2), defect);
            }
        }
    }
    defects
}

/// Commutator defect `A B - B A` restricted to the given columns. Empty
/// result means the operators commute on the spanned subspace.
pub fn commutes_with(
    a: &LinearOperator,
    b: &LinearOperator,
    on: &[u8],
) -> BTreeMap<u8, Vec<Polynomial>> {
    let ab = a.compose(b);
    let ba = b.compose(a);
    let diff = ab.sub(&ba);
    let mut out = BTreeMap::new();
    for &col in on {
        let column = diff.column(col as usize);
        if column.iter().any(|p| !p.is_zero()) {
            out.insert(col, column.to_vec());
        }
    }
    out
}

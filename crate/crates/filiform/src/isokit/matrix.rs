//! The symbolic matrix of a candidate isomorphism.
//!
//! An isomorphism between two filiform brackets written in adapted bases
//! preserves the lower central series, so its matrix is lower triangular
//! except for the single entry `m[1,2]`. The matrix is 1-based: column
//! `j+1` holds the image of `x_j`, row `i+1` the coefficient of `x_i`.
//!
//! Successive normal-form stages substitute the conclusions of the
//! normal-form lemmas into the entries.

use crate::exactalg::{Polynomial, VarId};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IsoError {
    #[error("normal form stage `{0}` is not available for dimension {1}")]
    BadStage(&'static str, usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
}

/// Normalization stages of the isomorphism matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Stage {
    /// Lower triangular plus the `m[1,2]` entry, fully symbolic.
    Raw,
    /// `m[1,2] = 0`.
    PostM12,
    /// Additionally `m[i,i] = m[1,1]^i` for `2 <= i <= n-1`, and
    /// `m[n,n] = m[1,1]^n` when `n` is odd (for even `n` the last diagonal
    /// entry stays symbolic until `m[2,1] = 0` is known).
    PostDiagonal,
    /// Diagonal all 1, `m[1,2] = m[2,1] = 0`, constant subdiagonal
    /// `m[i+1,i] = m[3,2]` for `2 <= i <= n-2`. Only valid for `n >= 9`.
    PropG,
}

impl Stage {
    pub fn name(&self) -> &'static str {
        match self {
            Stage::Raw => "raw",
            Stage::PostM12 => "post-m12",
            Stage::PostDiagonal => "post-diagonal",
            Stage::PropG => "prop-g",
        }
    }

    pub fn parse(s: &str) -> Option<Stage> {
        match s {
            "raw" => Some(Stage::Raw),
            "post-m12" => Some(Stage::PostM12),
            "post-diagonal" => Some(Stage::PostDiagonal),
            "prop-g" => Some(Stage::PropG),
            _ => None,
        }
    }
}

/// Dense polynomial matrix in the central-series-preserving shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsoMatrix {
    dim: usize,
    // rows[i][j] = entry m[i+1, j+1]
    rows: Vec<Vec<Polynomial>>,
}

impl IsoMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry `m[i,j]` (1-based).
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.rows[i - 1][j - 1]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, p: Polynomial) {
        self.rows[i - 1][j - 1] = p;
    }

    /// Image of basis vector `x_j` (0-based): coefficient of `x_k` is
    /// `m[k+1, j+1]`.
    pub fn basis_image(&self, j: usize) -> Vec<Polynomial> {
        (0..self.dim).map(|k| self.rows[k][j].clone()).collect()
    }

    /// Matrix-vector product over polynomial coordinates.
    pub fn apply(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        assert_eq!(v.len(), self.dim);
        let mut out = vec![Polynomial::zero(); self.dim];
        for (j, coord) in v.iter().enumerate() {
            if coord.is_zero() {
                continue;
            }
            for (k, slot) in out.iter_mut().enumerate() {
                let entry = &self.rows[k][j];
                if !entry.is_zero() {
                    *slot = &*slot + &(entry * coord);
                }
            }
        }
        out
    }

    /// Apply a variable substitution to every entry.
    pub fn substitute(
        &self,
        bindings: &std::collections::BTreeMap<VarId, Polynomial>,
    ) -> IsoMatrix {
        IsoMatrix {
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|p| p.substitute(bindings)).collect())
                .collect(),
        }
    }

    /// Number of entries that are bare symbolic variables.
    pub fn symbolic_entry_count(&self) -> usize {
        self.rows
            .iter()
            .flatten()
            .filter(|p| {
                p.num_terms() == 1
                    && p.terms()
                        .next()
                        .map(|(m, c)| m.degree() == 1 && c.abs().is_one())
                        .unwrap_or(false)
            })
            .count()
    }
}

impl fmt::Display for IsoMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            writeln!(f, "[ {} ]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// The symbolic isomorphism matrix at a given normal-form stage.
pub fn generic_g(n: usize, stage: Stage) -> Result<IsoMatrix, IsoError> {
    assert!(n >= 3);
    if stage == Stage::PropG && n < 9 {
        // the constant-subdiagonal normal form fails below dimension 9
        return Err(IsoError::BadStage("prop-g", n));
    }
    let mut rows = vec![vec![Polynomial::zero(); n]; n];
    for i in 1..=n {
        for j in 1..=i {
            rows[i - 1][j - 1] = Polynomial::var(VarId::entry(i as u8, j as u8));
        }
    }
    rows[0][1] = Polynomial::var(VarId::entry(1, 2));
    let mut g = IsoMatrix { dim: n, rows };
    match stage {
        Stage::Raw => {}
        Stage::PostM12 => {
            g.set_entry(1, 2, Polynomial::zero());
        }
        Stage::PostDiagonal => {
            g.set_entry(1, 2, Polynomial::zero());
            let m11 = Polynomial::var(VarId::entry(1, 1));
            for i in 2..=(n - 1) {
                g.set_entry(i, i, m11.pow(i as u32));
            }
            if n % 2 == 1 {
                g.set_entry(n, n, m11.pow(n as u32));
            }
        }
        Stage::PropG => {
            g.set_entry(1, 2, Polynomial::zero());
            g.set_entry(2, 1, Polynomial::zero());
            for i in 1..=n {
                g.set_entry(i, i, Polynomial::one());
            }
            let a = Polynomial::var(VarId::entry(3, 2));
            for i in 2..=(n - 2) {
                g.set_entry(i + 1, i, a.clone());
            }
        }
    }
    Ok(g)
}

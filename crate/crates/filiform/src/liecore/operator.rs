//! Linear operators and the basis split used by the deformation
//! construction.

use crate::exactalg::Polynomial;

/// A linear operator given by its matrix: column `j` is the image of `x_j`,
/// row `k` the coefficient of `x_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearOperator {
    dim: usize,
    cols: Vec<Vec<Polynomial>>,
}

impl LinearOperator {
    pub fn zero(dim: usize) -> Self {
        LinearOperator {
            dim,
            cols: vec![vec![Polynomial::zero(); dim]; dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut op = LinearOperator::zero(dim);
        for i in 0..dim {
            op.cols[i][i] = Polynomial::one();
        }
        op
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn set(&mut self, row: usize, col: usize, p: Polynomial) {
        self.cols[col][row] = p;
    }

    pub fn get(&self, row: usize, col: usize) -> &Polynomial {
        &self.cols[col][row]
    }

    pub fn column(&self, col: usize) -> &[Polynomial] {
        &self.cols[col]
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().flatten().all(Polynomial::is_zero)
    }

    /// Image of a vector with polynomial coordinates.
    pub fn apply(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        assert_eq!(v.len(), self.dim);
        let mut out = vec![Polynomial::zero(); self.dim];
        for (j, coord) in v.iter().enumerate() {
            if coord.is_zero() {
                continue;
            }
            for (k, entry) in self.cols[j].iter().enumerate() {
                if !entry.is_zero() {
                    out[k] = &out[k] + &(entry * coord);
                }
            }
        }
        out
    }

    /// Matrix product `self * other` (apply `other` first).
    pub fn compose(&self, other: &LinearOperator) -> LinearOperator {
        assert_eq!(self.dim, other.dim);
        LinearOperator {
            dim: self.dim,
            cols: (0..self.dim).map(|j| self.apply(&other.cols[j])).collect(),
        }
    }

    pub fn sub(&self, other: &LinearOperator) -> LinearOperator {
        assert_eq!(self.dim, other.dim);
        LinearOperator {
            dim: self.dim,
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
                .collect(),
        }
    }

    /// True when every column outside `cols` is zero and every row outside
    /// `rows` is zero (the operator maps the spanned subspace into itself
    /// and kills the rest).
    pub fn supported_on(&self, indices: &[u8]) -> bool {
        for j in 0..self.dim {
            for k in 0..self.dim {
                if self.cols[j][k].is_zero() {
                    continue;
                }
                if !indices.contains(&(j as u8)) || !indices.contains(&(k as u8)) {
                    return false;
                }
            }
        }
        true
    }
}

/// The basis split `<x_p, x_q> (+) h` with `h` spanned by the remaining
/// indices. For filiform algebras the standard split is `x_0, x_1` against
/// the derived ideal `<x_2 .. x_{n-1}>`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubspaceSplit {
    pub dim: usize,
    pub x0: u8,
    pub x1: u8,
    pub ideal: Vec<u8>,
}

impl SubspaceSplit {
    pub fn new(dim: usize, x0: u8, x1: u8, ideal: Vec<u8>) -> Self {
        let mut all: Vec<u8> = vec![x0, x1];
        all.extend_from_slice(&ideal);
        all.sort_unstable();
        let expected: Vec<u8> = (0..dim as u8).collect();
        assert_eq!(
            all, expected,
            "complement and ideal must partition the basis"
        );
        SubspaceSplit { dim, x0, x1, ideal }
    }

    /// The standard filiform split: complement `x_0, x_1`, ideal `x_2..x_{n-1}`.
    pub fn standard(dim: usize) -> Self {
        SubspaceSplit::new(dim, 0, 1, (2..dim as u8).collect())
    }

    pub fn in_ideal(&self, idx: u8) -> bool {
        self.ideal.contains(&idx)
    }
}

//! Tagged variables.
//!
//! Three families of indeterminates occur in the engine:
//!
//! * `a[r,s]` — parameters of the Vergne cocycle basis,
//! * `m[i,j]` — entries of a candidate isomorphism matrix (1-based),
//! * `t`      — the deformation parameter.
//!
//! The derived `Ord` gives the fixed variable order used by the monomial
//! order: all `a`-variables (ascending `(r,s)`) before all `m`-variables
//! (ascending `(i,j)`) before `t`.

use std::fmt;

/// A variable of the polynomial ring.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VarId {
    /// Vergne parameter `a[r,s]`.
    Param(u8, u8),
    /// Isomorphism-matrix entry `m[i,j]`, `1 <= j <= i <= n` plus `m[1,2]`.
    Entry(u8, u8),
    /// The deformation parameter `t`.
    Time,
}

impl VarId {
    pub fn param(r: u8, s: u8) -> Self {
        VarId::Param(r, s)
    }

    pub fn entry(i: u8, j: u8) -> Self {
        VarId::Entry(i, j)
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::Param(r, s) => write!(f, "a[{r},{s}]"),
            VarId::Entry(i, j) => write!(f, "m[{i},{j}]"),
            VarId::Time => write!(f, "t"),
        }
    }
}

impl VarId {
    /// LaTeX spelling: `a_{1,4}`, `m_{3,2}`, `t`.
    pub fn latex(&self) -> String {
        match self {
            VarId::Param(r, s) => format!("a_{{{r},{s}}}"),
            VarId::Entry(i, j) => format!("m_{{{i},{j}}}"),
            VarId::Time => "t".to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variable_order() {
        // a's before m's before t, each family lexicographic.
        assert!(VarId::param(1, 4) < VarId::param(1, 5));
        assert!(VarId::param(1, 8) < VarId::param(2, 6));
        assert!(VarId::param(4, 10) < VarId::entry(1, 1));
        assert!(VarId::entry(3, 2) < VarId::entry(3, 3));
        assert!(VarId::entry(11, 11) < VarId::Time);
    }
}

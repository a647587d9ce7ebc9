//! Monomials over tagged variables.

use super::var::VarId;
use std::cmp::Ordering;
use std::fmt;

/// A power product of variables. Exponents are strictly positive; the empty
/// monomial is the constant 1.
///
/// Total order: graded lexicographic. Degrees compare first; on equal degree
/// the exponent vectors are compared variable by variable in ascending
/// [`VarId`] order, and the first variable with differing exponent decides
/// (larger exponent means larger monomial).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    // sorted by VarId, no zero exponents
    exps: Vec<(VarId, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    /// Build from unsorted (var, exponent) pairs; merges duplicates, drops zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Self {
        let mut exps: Vec<(VarId, u32)> = Vec::new();
        for (v, e) in pairs {
            if e == 0 {
                continue;
            }
            match exps.binary_search_by_key(&v, |&(w, _)| w) {
                Ok(idx) => exps[idx].1 += e,
                Err(idx) => exps.insert(idx, (v, e)),
            }
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent_of(&self, v: VarId) -> u32 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|idx| self.exps[idx].1)
            .unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn pairs(&self) -> &[(VarId, u32)] {
        &self.exps
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => {
                    exps.push(self.exps[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(other.exps[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((self.exps[i].0, self.exps[i].1 + other.exps[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial { exps }
    }

    /// Exact division; `None` when some exponent of `other` exceeds ours.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        let mut j = 0;
        for &(v, e) in &self.exps {
            let mut rem = e;
            if j < other.exps.len() && other.exps[j].0 < v {
                return None; // divisor has a variable we lack
            }
            if j < other.exps.len() && other.exps[j].0 == v {
                if other.exps[j].1 > e {
                    return None;
                }
                rem = e - other.exps[j].1;
                j += 1;
            }
            if rem > 0 {
                exps.push((v, rem));
            }
        }
        if j < other.exps.len() {
            return None;
        }
        Some(Monomial { exps })
    }

    pub fn pow(&self, n: u32) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v, e * n)).collect(),
        }
    }

    /// Variable-wise gcd with another monomial.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::new();
        for &(v, e) in &self.exps {
            let f = other.exponent_of(v);
            let m = e.min(f);
            if m > 0 {
                exps.push((v, m));
            }
        }
        Monomial { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Same degree: walk variables in ascending order, first difference wins.
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.exps.get(i), other.exps.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    // The side owning the earlier variable has a positive
                    // exponent where the other has zero.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        match ea.cmp(&eb) {
                            Ordering::Equal => {}
                            ord => return ord,
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(v, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(VarId, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn graded_lex_order() {
        let a14 = VarId::param(1, 4);
        let a26 = VarId::param(2, 6);
        let a38 = VarId::param(3, 8);
        // degree dominates
        assert!(m(&[(a14, 1)]) < m(&[(a14, 1), (a26, 1)]));
        // equal degree: first differing variable, larger exponent wins
        assert!(m(&[(a26, 2)]) > m(&[(a26, 1), (a38, 1)]));
        assert!(m(&[(a14, 1), (a38, 1)]) > m(&[(a26, 2)]));
    }

    #[test]
    fn division_and_gcd() {
        let x = VarId::entry(1, 1);
        let y = VarId::entry(2, 1);
        let xy2 = m(&[(x, 1), (y, 2)]);
        let y1 = m(&[(y, 1)]);
        assert_eq!(xy2.try_div(&y1), Some(m(&[(x, 1), (y, 1)])));
        assert_eq!(y1.try_div(&xy2), None);
        assert_eq!(xy2.gcd(&m(&[(y, 3)])), m(&[(y, 2)]));
    }
}

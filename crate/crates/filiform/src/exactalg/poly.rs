//! Sparse multivariate polynomials over the rationals.
//!
//! The term map is a `BTreeMap` keyed by the graded-lexicographic monomial
//! order, so iteration, equality and the canonical text form are all
//! deterministic. Zero coefficients are never stored; the zero polynomial has
//! an empty term map.

use super::monomial::Monomial;
use super::rational::Rational;
use super::var::VarId;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("unbound variable {0} in evaluation")]
    UnboundVariable(VarId),
}

/// Sparse exact-rational multivariate polynomial.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    pub fn int(n: i64) -> Self {
        Polynomial::constant(Rational::from(n))
    }

    pub fn var(v: VarId) -> Self {
        Polynomial::from_monomial(Monomial::var(v), Rational::one())
    }

    pub fn from_monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant value, if this polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    /// Leading term under the monomial order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Highest power of `v` occurring.
    pub fn degree_in(&self, v: VarId) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent_of(v))
            .max()
            .unwrap_or(0)
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of_power(&self, v: VarId, k: u32) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if m.exponent_of(v) == k {
                let reduced = m
                    .try_div(&Monomial::var(v).pow(k))
                    .expect("exponent checked");
                out.add_term(reduced, c.clone());
            }
        }
        out
    }

    /// Exact evaluation. Every variable of `self` must be bound.
    pub fn eval(&self, point: &BTreeMap<VarId, Rational>) -> Result<Rational, PolyError> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for &(v, e) in m.pairs() {
                let val = point.get(&v).ok_or(PolyError::UnboundVariable(v))?;
                term = &term * &val.pow(e);
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Simultaneous substitution of polynomials for variables. Unbound
    /// variables pass through unchanged.
    pub fn substitute(&self, bindings: &BTreeMap<VarId, Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut factor = Polynomial::constant(c.clone());
            let mut passthrough = Monomial::one();
            for &(v, e) in m.pairs() {
                match bindings.get(&v) {
                    Some(img) => factor = &factor * &img.pow(e),
                    None => passthrough = passthrough.mul(&Monomial::var(v).pow(e)),
                }
            }
            out = &out + &factor.mul_monomial(&passthrough);
        }
        out
    }

    /// Substitute `v := num/den` and clear denominators: returns
    /// `den^d * self(v := num/den)` where `d = deg_v(self)`, together with `d`.
    pub fn substitute_fraction(
        &self,
        v: VarId,
        num: &Polynomial,
        den: &Polynomial,
    ) -> (Polynomial, u32) {
        let d = self.degree_in(v);
        if d == 0 {
            return (self.clone(), 0);
        }
        let mut out = Polynomial::zero();
        for k in 0..=d {
            let coeff = self.coeff_of_power(v, k);
            if coeff.is_zero() {
                continue;
            }
            out = &out + &(&(&coeff * &num.pow(k)) * &den.pow(d - k));
        }
        (out, d)
    }

    /// Gcd of the coefficients: `gcd(numerators) / lcm(denominators)`, with
    /// the sign of the leading coefficient. Zero for the zero polynomial.
    pub fn rational_content(&self) -> Rational {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::{One, Signed, Zero};
        if self.is_zero() {
            return Rational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mag = Rational::from_big(num_rational::BigRational::new(num_gcd.abs(), den_lcm));
        if self
            .leading()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false)
        {
            -&mag
        } else {
            mag
        }
    }

    /// Greatest monomial dividing every term (1 for the zero polynomial).
    pub fn monomial_content(&self) -> Monomial {
        let mut iter = self.terms.keys();
        let Some(first) = iter.next() else {
            return Monomial::one();
        };
        let mut acc = first.clone();
        for m in iter {
            acc = acc.gcd(m);
            if acc.is_one() {
                break;
            }
        }
        acc
    }

    /// Divide out a monomial known to divide every term.
    pub fn div_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.try_div(m).expect("content divides"), c.clone()))
                .collect(),
        }
    }

    /// Exact polynomial division: `Some(q)` with `self = q * divisor`, else `None`.
    pub fn try_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        let (dm, dc) = {
            let (m, c) = divisor.leading().unwrap();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().unwrap();
            let qm = rm.try_div(&dm)?;
            let qc = rc / &dc;
            let piece = Polynomial::from_monomial(qm, qc);
            rem = &rem - &(&piece * divisor);
            quot = &quot + &piece;
        }
        Some(quot)
    }

    /// Divide by the leading coefficient, making the polynomial monic under
    /// the monomial order. Zero stays zero.
    pub fn normalized(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// True when `self` is a nonzero rational multiple of `other`.
    pub fn proportional_to(&self, other: &Polynomial) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.normalized() == other.normalized()
    }

    /// LaTeX rendering with `a_{r,s}`, `m_{i,j}`, `t` spellings.
    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff = if mag.is_one() && !m.is_one() {
                String::new()
            } else if mag.is_integer() {
                mag.to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
            };
            out.push_str(&coeff);
            for &(v, e) in m.pairs() {
                if e == 1 {
                    out.push_str(&v.latex());
                } else {
                    out.push_str(&format!("{}^{{{}}}", v.latex(), e));
                }
            }
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text form: terms in descending monomial order, explicit `*`
    /// and `^`, coefficients as reduced rationals.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

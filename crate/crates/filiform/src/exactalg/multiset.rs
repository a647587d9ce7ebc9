//! Multiplicative sets of declared-nonzero polynomials.
//!
//! An open set of a variety is described by the polynomials that must not
//! vanish on it. Divisions performed during symbolic elimination are legal
//! exactly when the divisor is a unit of the corresponding localization, and
//! the certificate for that is purely syntactic: a nonzero rational times a
//! product of powers of the declared generators.

use super::poly::Polynomial;
use super::rational::Rational;
use std::fmt;

/// A set of polynomials declared nonvanishing (generators of a
/// multiplicative set, up to nonzero rational scalars).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiplicativeSet {
    gens: Vec<(String, Polynomial)>,
}

/// Successful factorization of a unit over a [`MultiplicativeSet`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitCertificate {
    /// Leading rational factor (never zero).
    pub scalar: Rational,
    /// Generator names with multiplicity.
    pub factors: Vec<(String, u32)>,
}

impl fmt::Display for UnitCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.scalar)?;
        for (name, e) in &self.factors {
            if *e == 1 {
                write!(f, " * ({name})")?;
            } else {
                write!(f, " * ({name})^{e}")?;
            }
        }
        Ok(())
    }
}

impl MultiplicativeSet {
    pub fn new(gens: Vec<(String, Polynomial)>) -> Self {
        for (name, g) in &gens {
            assert!(
                !g.is_zero(),
                "zero generator `{name}` in multiplicative set"
            );
        }
        MultiplicativeSet { gens }
    }

    pub fn empty() -> Self {
        MultiplicativeSet::default()
    }

    pub fn generators(&self) -> &[(String, Polynomial)] {
        &self.gens
    }

    pub fn push(&mut self, name: impl Into<String>, g: Polynomial) {
        assert!(!g.is_zero());
        self.gens.push((name.into(), g));
    }

    pub fn extend_from(&mut self, other: &MultiplicativeSet) {
        self.gens.extend(other.gens.iter().cloned());
    }

    /// Try to certify `p` as a unit: a nonzero rational times a product of
    /// powers of generators. Returns the factorization on success.
    ///
    /// The check is syntactic (repeated exact division by generators); no
    /// semantic reasoning about the variety is performed.
    pub fn certify(&self, p: &Polynomial) -> Option<UnitCertificate> {
        if p.is_zero() {
            return None;
        }
        if let Some(c) = p.as_constant() {
            return Some(UnitCertificate {
                scalar: c,
                factors: Vec::new(),
            });
        }
        // Scale-normalize: remember the leading coefficient, work monic.
        let lead = p.leading().unwrap().1.clone();
        let mut rest = p.normalized();
        let mut scalar = lead;
        let mut factors: Vec<(String, u32)> = Vec::new();
        'outer: loop {
            if let Some(c) = rest.as_constant() {
                scalar = &scalar * &c;
                return Some(UnitCertificate { scalar, factors });
            }
            for (name, g) in &self.gens {
                let g_monic = g.normalized();
                if let Some(q) = rest.try_div(&g_monic) {
                    match factors.iter_mut().find(|(n, _)| n == name) {
                        Some((_, e)) => *e += 1,
                        None => factors.push((name.clone(), 1)),
                    }
                    rest = q;
                    continue 'outer;
                }
            }
            return None;
        }
    }

    pub fn is_unit(&self, p: &Polynomial) -> bool {
        self.certify(p).is_some()
    }
}

//! Solving equations that are linear in one variable, inside a localization.
//!
//! `solve_linear(p, v, ms)` mechanizes the elimination steps of the
//! isomorphism analysis: from `p = 0` with `p = c*v + r` and `c` a certified
//! unit of the multiplicative set `ms`, conclude `v = -r/c`. The result is a
//! [`Fraction`] whose denominator stays a certified unit; identity assertions
//! later clear such denominators instead of working in a fraction field.

use super::multiset::{MultiplicativeSet, UnitCertificate};
use super::poly::Polynomial;
use super::var::VarId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("polynomial is not linear in {0} (degree {1})")]
    NotLinear(VarId, u32),
    #[error("coefficient of {0} is not a certified unit: {1}")]
    NotInvertible(VarId, String),
}

/// A quotient `num / den` of polynomials whose denominator has been
/// certified nonzero. `den` is normalized to have a positive leading
/// coefficient; a constant denominator is folded into `num` (making
/// `den = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fraction {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl Fraction {
    pub fn from_poly(p: Polynomial) -> Self {
        Fraction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den == Polynomial::one()
    }

    /// Reduce by common monomial content and common generator factors of
    /// `ms`, fold constant denominators into the numerator, and normalize so
    /// the numerator has integer-primitive coefficients and the denominator
    /// a positive leading coefficient.
    pub fn reduced(&self, ms: &MultiplicativeSet) -> Fraction {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        if num.is_zero() {
            return Fraction {
                num,
                den: Polynomial::one(),
            };
        }
        // common monomial content
        let content = num.monomial_content().gcd(&den.monomial_content());
        if !content.is_one() {
            num = num.div_monomial(&content);
            den = den.div_monomial(&content);
        }
        // common generator factors
        'outer: loop {
            if den.is_constant() {
                break;
            }
            for (_, g) in ms.generators() {
                if g.is_constant() {
                    continue;
                }
                let g = g.normalized();
                if let (Some(qn), Some(qd)) = (num.try_div(&g), den.try_div(&g)) {
                    num = qn;
                    den = qd;
                    continue 'outer;
                }
            }
            break;
        }
        // fold constant denominators into the numerator
        if let Some(c) = den.as_constant() {
            return Fraction {
                num: num.scale(&c.recip()),
                den: Polynomial::one(),
            };
        }
        // numerator integer-primitive: divide both by its rational content
        let c = num.rational_content();
        let inv = c.recip();
        num = num.scale(&inv);
        den = den.scale(&inv);
        // positive leading coefficient on the denominator
        let lead = den.leading().unwrap().1.clone();
        if lead.is_negative() {
            num = -&num;
            den = -&den;
        }
        Fraction { num, den }
    }

    /// Substitute `var := val` (a fraction) into this fraction and reduce.
    pub fn substitute_var(&self, var: VarId, val: &Fraction, ms: &MultiplicativeSet) -> Fraction {
        let dn = self.num.degree_in(var);
        let dd = self.den.degree_in(var);
        if dn == 0 && dd == 0 {
            return self.clone();
        }
        let (num_c, _) = self.num.substitute_fraction(var, &val.num, &val.den);
        let (den_c, _) = self.den.substitute_fraction(var, &val.num, &val.den);
        let num = &num_c * &val.den.pow(dd);
        let den = &den_c * &val.den.pow(dn);
        Fraction { num, den }.reduced(ms)
    }

    /// The definitional polynomial `den * v - num`, which vanishes exactly
    /// when `v` equals this fraction.
    pub fn definition(&self, v: VarId) -> Polynomial {
        &(&self.den * &Polynomial::var(v)) - &self.num
    }
}

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Outcome of a successful linear solve.
#[derive(Clone, Debug)]
pub struct LinearSolution {
    pub var: VarId,
    pub value: Fraction,
    /// The coefficient of `var` in the input, before any normalization.
    pub cofactor: Polynomial,
    /// Certificate that the cofactor is a unit.
    pub certificate: UnitCertificate,
}

/// Solve `p = 0` for `v`.
///
/// The full monomial content of `p` is divided out first (each content
/// variable must itself be a certified unit); the primitive part must then
/// have degree exactly 1 in `v`, with a unit coefficient.
pub fn solve_linear(
    p: &Polynomial,
    v: VarId,
    ms: &MultiplicativeSet,
) -> Result<LinearSolution, SolveError> {
    use super::monomial::Monomial;
    use super::rational::Rational;
    // Strip the monomial content, capping the v-part so the primitive part
    // keeps exactly one power of v when possible.
    let full_content = p.monomial_content();
    let v_cap = p.degree_in(v).saturating_sub(1);
    let content = Monomial::from_pairs(full_content.pairs().iter().map(|&(w, e)| {
        if w == v {
            (w, e.min(v_cap))
        } else {
            (w, e)
        }
    }));
    let mut stripped = p.clone();
    if !content.is_one() {
        let content_poly = Polynomial::from_monomial(content.clone(), Rational::one());
        if ms.certify(&content_poly).is_none() {
            return Err(SolveError::NotInvertible(
                v,
                format!("monomial content {content}"),
            ));
        }
        stripped = stripped.div_monomial(&content);
    }
    let deg = stripped.degree_in(v);
    if deg != 1 {
        return Err(SolveError::NotLinear(v, deg));
    }
    let c = stripped.coeff_of_power(v, 1);
    let r = stripped.coeff_of_power(v, 0);
    let certificate = ms
        .certify(&c)
        .ok_or_else(|| SolveError::NotInvertible(v, c.to_string()))?;
    let raw = Fraction {
        num: -&r,
        den: c.clone(),
    };
    Ok(LinearSolution {
        var: v,
        value: raw.reduced(ms),
        cofactor: c,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_poly;

    fn p(s: &str) -> Polynomial {
        parse_poly(s).unwrap()
    }

    fn ms(gens: &[&str]) -> MultiplicativeSet {
        MultiplicativeSet::new(gens.iter().map(|s| (s.to_string(), p(s))).collect())
    }

    #[test]
    fn eq6_solve() {
        // -2a14^2 m11^5 m21 - a15 m11^7 + a15 m11^6 = 0  solved for m21
        let e1 = p("-2*a[1,4]^2*m[1,1]^5*m[2,1] - a[1,5]*m[1,1]^7 + a[1,5]*m[1,1]^6");
        let sol = solve_linear(
            &e1,
            VarId::entry(2, 1),
            &ms(&["a[1,4]", "a[1,5]", "m[1,1]"]),
        )
        .unwrap();
        assert_eq!(sol.value.num, p("a[1,5]*m[1,1] - a[1,5]*m[1,1]^2"));
        assert_eq!(sol.value.den, p("2*a[1,4]^2"));
        // m21 = m11*a15*(1 - m11) / (2 a14^2)
        assert_eq!(sol.value.num, &p("m[1,1]*a[1,5]") * &p("1 - m[1,1]"));
    }

    #[test]
    fn trivial_solve() {
        let sol = solve_linear(&p("m[4,2]"), VarId::entry(4, 2), &ms(&[])).unwrap();
        assert!(sol.value.num.is_zero());
        assert!(sol.value.is_polynomial());
    }

    #[test]
    fn factored_quadratic_after_content() {
        // a26*(2 m42 - m32^2) = 0 with a26 nonzero gives m42 = m32^2/2
        let q = p("a[2,6]*(2*m[4,2] - m[3,2]^2)");
        let sol = solve_linear(&q, VarId::entry(4, 2), &ms(&["a[2,6]"])).unwrap();
        assert_eq!(sol.value.num, p("1/2*m[3,2]^2"));
        assert!(sol.value.is_polynomial());
    }

    #[test]
    fn not_linear_and_not_invertible() {
        assert!(matches!(
            solve_linear(&p("m[4,2]^2 - 1"), VarId::entry(4, 2), &ms(&[])),
            Err(SolveError::NotLinear(_, 2))
        ));
        assert!(matches!(
            solve_linear(&p("a[2,6]*m[4,2] - 1"), VarId::entry(4, 2), &ms(&[])),
            Err(SolveError::NotInvertible(..))
        ));
    }

    #[test]
    fn solution_substitutes_back_to_zero() {
        let e1 = p("-2*a[1,4]^2*m[1,1]^5*m[2,1] - a[1,5]*m[1,1]^7 + a[1,5]*m[1,1]^6");
        let v = VarId::entry(2, 1);
        let sol = solve_linear(&e1, v, &ms(&["a[1,4]", "a[1,5]", "m[1,1]"])).unwrap();
        let (cleared, _) = e1.substitute_fraction(v, &sol.value.num, &sol.value.den);
        assert!(cleared.is_zero());
    }
}

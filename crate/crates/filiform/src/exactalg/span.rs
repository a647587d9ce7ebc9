//! Exact rational linear algebra: row reduction and linear span membership.

use super::monomial::Monomial;
use super::poly::Polynomial;
use super::rational::Rational;
use std::collections::BTreeSet;

/// Reduced row echelon form, in place. Returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pivot_row) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot_row);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, pv) in row.iter_mut().zip(&pivot) {
                    let delta = &factor * pv;
                    *x = &*x - &delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    pivots
}

pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    rref(&mut rows);
    rows.len()
}

/// Express `p` as an exact rational linear combination of `basis`, if
/// possible. Returns one coefficient per basis element (free coefficients
/// are set to zero); `None` when `p` is outside the span.
pub fn linear_span_member(p: &Polynomial, basis: &[Polynomial]) -> Option<Vec<Rational>> {
    if p.is_zero() {
        return Some(vec![Rational::zero(); basis.len()]);
    }
    let mut monomials: BTreeSet<Monomial> = BTreeSet::new();
    for q in basis.iter().chain(std::iter::once(p)) {
        for (m, _) in q.terms() {
            monomials.insert(m.clone());
        }
    }
    let monomials: Vec<Monomial> = monomials.into_iter().collect();
    let coord = |q: &Polynomial, m: &Monomial| -> Rational {
        q.terms()
            .find(|(k, _)| *k == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    };
    // Augmented system [B | p] over the monomial coordinates.
    let ncols = basis.len();
    let mut rows: Vec<Vec<Rational>> = monomials
        .iter()
        .map(|m| {
            let mut row: Vec<Rational> = basis.iter().map(|b| coord(b, m)).collect();
            row.push(coord(p, m));
            row
        })
        .collect();
    let pivots = rref(&mut rows);
    // Inconsistent when a pivot lands in the augmented column.
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (row, &c) in rows.iter().zip(pivots.iter()) {
        x[c] = row[ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_poly;

    fn p(s: &str) -> Polynomial {
        parse_poly(s).unwrap()
    }

    #[test]
    fn membership_in_own_span() {
        let eq = p("-3*a[2,6]^2 + a[2,6]*a[3,8] + 2*a[1,4]*a[3,8]");
        assert_eq!(
            linear_span_member(&eq, std::slice::from_ref(&eq)),
            Some(vec![Rational::one()])
        );
        assert_eq!(
            linear_span_member(&eq.scale(&Rational::from(2)), std::slice::from_ref(&eq)),
            Some(vec![Rational::from(2)])
        );
    }

    #[test]
    fn outside_span() {
        let eq = p("-3*a[2,6]^2 + a[2,6]*a[3,8] + 2*a[1,4]*a[3,8]");
        assert_eq!(linear_span_member(&p("a[1,4]"), &[eq]), None);
    }

    #[test]
    fn two_dimensional_combination() {
        let b1 = p("a[1,4] + a[2,6]");
        let b2 = p("a[1,4] - a[2,6]");
        let target = p("3*a[1,4] + a[2,6]");
        let coeffs = linear_span_member(&target, &[b1.clone(), b2.clone()]).unwrap();
        let mut rebuilt = Polynomial::zero();
        for (c, b) in coeffs.iter().zip([&b1, &b2]) {
            rebuilt = &rebuilt + &b.scale(c);
        }
        assert_eq!(rebuilt, target);
    }

    #[test]
    fn rref_rank() {
        let one = Rational::one;
        let rows = vec![
            vec![one(), Rational::from(2), Rational::from(3)],
            vec![Rational::from(2), Rational::from(4), Rational::from(6)],
            vec![one(), one(), one()],
        ];
        assert_eq!(rank(rows), 2);
    }
}

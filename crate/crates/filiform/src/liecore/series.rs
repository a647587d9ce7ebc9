//! Lower central series of a specialized (constant-coefficient) bracket.

use super::bilinear::BilinearMap;
use super::LieError;
use crate::exactalg::span::rref;
use crate::exactalg::Rational;

/// Dimensions of the lower central series `C_0 = g`, `C_{i+1} = [g, C_i]`,
/// computed by exact row reduction. The sequence is followed until it
/// reaches zero or stabilizes; a nonzero stable value is reported twice so
/// non-nilpotency is visible in the output.
pub fn lower_central_series(mu: &BilinearMap) -> Result<Vec<usize>, LieError> {
    let n = mu.dim();
    let tensor = mu.constant_tensor()?;
    // bracket of basis vector x_a with a rational vector
    let bracket_basis = |a: usize, v: &[Rational]| -> Vec<Rational> {
        let mut out = vec![Rational::zero(); n];
        for &(i, j, k, ref c) in &tensor {
            let (i, j, k) = (i as usize, j as usize, k as usize);
            if i == a {
                out[k] = &out[k] + &(c * &v[j]);
            } else if j == a {
                out[k] = &out[k] - &(c * &v[i]);
            }
        }
        out
    };

    let mut dims = vec![n];
    // current C_i as reduced row basis
    let mut current: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = vec![Rational::zero(); n];
            row[i] = Rational::one();
            row
        })
        .collect();
    loop {
        let mut next: Vec<Vec<Rational>> = Vec::new();
        for a in 0..n {
            for v in &current {
                let w = bracket_basis(a, v);
                if w.iter().any(|x| !x.is_zero()) {
                    next.push(w);
                }
            }
        }
        rref(&mut next);
        let d = next.len();
        let prev = *dims.last().unwrap();
        dims.push(d);
        if d == 0 || d == prev {
            return Ok(dims);
        }
        current = next;
    }
}

/// A constant bracket is filiform when it is nilpotent of maximal class
/// `n - 1`, i.e. the series is `n, n-2, n-3, ..., 1, 0`.
pub fn is_filiform(mu: &BilinearMap) -> Result<bool, LieError> {
    let n = mu.dim();
    let dims = lower_central_series(mu)?;
    Ok(*dims.last().unwrap() == 0 && dims.len() == n)
}

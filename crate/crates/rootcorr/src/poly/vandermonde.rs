use crate::error::{Error, Result};

use super::symfunc::schur;
use super::types::{Partition, PointConfig, TailCoefficients};
use super::{poly_deriv_eval, poly_eval};

/// Signed Vandermonde determinant `Π_{i<j} (x_j - x_i)`.
pub fn vandermonde_det(x: &PointConfig) -> f64 {
    let pts = x.points();
    let mut d = 1.0;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            d *= pts[j] - pts[i];
        }
    }
    d
}

/// Solves `V(x)·y = rhs` where `V` has rows `(1, x_i, ..., x_i^{k-1})`.
///
/// The solution is the monomial coefficient vector of the polynomial
/// interpolating `(x_i, rhs_i)`, so the solve runs through Newton divided
/// differences rather than dense elimination. Residuals stay small on
/// moderately clustered nodes where a generic LU loses digits.
pub fn solve_vandermonde(x: &PointConfig, rhs: &[f64]) -> Result<Vec<f64>> {
    let k = x.k();
    if rhs.len() != k {
        return Err(Error::LengthMismatch { expected: k, got: rhs.len() });
    }
    let mut values = rhs.to_vec();
    newton_solve_in_place(x.points(), &mut values);
    Ok(values)
}

/// In-place Vandermonde solve: on entry `values[i]` holds the prescribed
/// value at `pts[i]`, on exit the monomial coefficients. Divided differences
/// followed by Newton-to-monomial expansion.
pub(crate) fn newton_solve_in_place(pts: &[f64], values: &mut [f64]) {
    let k = pts.len();
    for level in 1..k {
        for i in (level..k).rev() {
            values[i] = (values[i] - values[i - 1]) / (pts[i] - pts[i - level]);
        }
    }
    for j in (0..k.saturating_sub(1)).rev() {
        for i in j..k - 1 {
            values[i] -= pts[j] * values[i + 1];
        }
    }
}

/// The low-order coefficients `η_0, ..., η_{k-1}` that make the degree-`n`
/// polynomial with tail `ξ_k, ..., ξ_n` vanish at every point of `x`,
/// computed through the Vandermonde solve.
pub fn eta_vandermonde(x: &PointConfig, tail: &TailCoefficients, n: usize) -> Result<Vec<f64>> {
    let k = x.k();
    if n < k || tail.len() != n - k + 1 {
        return Err(Error::LengthMismatch { expected: n + 1 - k, got: tail.len() });
    }
    let rhs: Vec<f64> = x
        .points()
        .iter()
        .map(|&xi| -xi.powi(k as i32) * poly_eval(tail.values(), xi))
        .collect();
    solve_vandermonde(x, &rhs)
}

/// The same coefficients through the Schur expansion
/// `η_i = (-1)^{k-i} Σ_{j=k}^{n} ξ_j S_{(j-k+1, 1^{k-i-1})}(x)`.
///
/// The sign is fixed by agreement with [`eta_vandermonde`]: Cramer's rule on
/// the column-substituted Vandermonde matrix gives `(-1)^{k-i-1}` per term,
/// and the leading minus of the η definition flips it to `(-1)^{k-i}` with
/// `i` running from 0.
#[allow(clippy::needless_range_loop)] // index math mirrors the formulas
pub fn eta_schur(x: &PointConfig, tail: &TailCoefficients, n: usize) -> Result<Vec<f64>> {
    let k = x.k();
    if n < k || tail.len() != n - k + 1 {
        return Err(Error::LengthMismatch { expected: n + 1 - k, got: tail.len() });
    }
    let mut eta = vec![0.0; k];
    for i in 0..k {
        let sign = if (k - i).is_multiple_of(2) { 1.0 } else { -1.0 };
        let mut acc = 0.0;
        for j in k..=n {
            let xi_j = tail.values()[j - k];
            if xi_j == 0.0 {
                continue;
            }
            let lam = Partition::hook(j - k, k - i - 1);
            acc += xi_j * schur(&lam, x)?;
        }
        eta[i] = sign * acc;
    }
    Ok(eta)
}

/// Closed form of the Jacobian determinant of `x ↦ η(x)`:
/// `(-1)^k Π_i G'(x_i) / Π_{i<j}(x_j - x_i)` where `G` carries coefficients
/// `(η_0, ..., η_{k-1}, ξ_k, ..., ξ_n)`.
///
/// Differentiating `G(x_i) = 0` in `x_j` gives `V (∂η/∂x) = -diag(G'(x_i))`
/// with `V_{il} = x_i^l`, hence the sign `(-1)^k`.
pub fn eta_jacobian_det(x: &PointConfig, tail: &TailCoefficients, n: usize) -> Result<f64> {
    let k = x.k();
    let eta = eta_vandermonde(x, tail, n)?;
    let mut coeffs = eta;
    coeffs.extend_from_slice(tail.values());
    let num: f64 = x.points().iter().map(|&xi| poly_deriv_eval(&coeffs, xi)).product();
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(sign * num / vandermonde_det(x))
}

//! Symmetric-function and Vandermonde algebra: elementary symmetric
//! polynomials, Schur functions, the coefficient map that forces a
//! polynomial to vanish at a point configuration, and the factorization
//! identities built on top of it.

mod factor;
mod symfunc;
mod types;
mod vandermonde;

pub use factor::{coeffs_from_factorization, derivative_at_root};
pub use symfunc::{elem_sym, elem_sym_all, schur};
pub use types::{Partition, PointConfig, TailCoefficients, SEPARATION_FLOOR_REL};
pub use vandermonde::{eta_jacobian_det, eta_schur, eta_vandermonde, solve_vandermonde, vandermonde_det};
pub(crate) use vandermonde::newton_solve_in_place;

/// Evaluates `Σ coeffs[j]·x^j` by Horner's rule. Coefficients ascend by degree.
pub fn poly_eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Evaluates the derivative `Σ j·coeffs[j]·x^{j-1}`.
pub fn poly_deriv_eval(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for j in (1..coeffs.len()).rev() {
        acc = acc * x + coeffs[j] * j as f64;
    }
    acc
}

/// Product of two coefficient vectors (ascending degree).
pub fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

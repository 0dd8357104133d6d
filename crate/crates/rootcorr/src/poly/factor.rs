use super::symfunc::elem_sym_all;
use super::types::PointConfig;
use super::poly_eval;
use crate::error::{Error, Result};

/// Coefficients of `Π_i (x - x_i) · Σ_j b_j x^j` in ascending degree:
/// `a_i = Σ_j (-1)^{k-i+j} σ_{k-i+j}(x) b_j`, `i = 0..n` with
/// `n = k + deg(b)`.
pub fn coeffs_from_factorization(x: &PointConfig, b: &[f64]) -> Result<Vec<f64>> {
    if b.is_empty() {
        return Err(Error::LengthMismatch { expected: 1, got: 0 });
    }
    let k = x.k();
    let sigma = elem_sym_all(x);
    let n = k + b.len() - 1;
    let mut a = vec![0.0; n + 1];
    for (i, ai) in a.iter_mut().enumerate() {
        let mut acc = 0.0;
        for (j, &bj) in b.iter().enumerate() {
            let idx = k as i64 - i as i64 + j as i64;
            if idx < 0 || idx > k as i64 {
                continue;
            }
            let sign = if idx % 2 == 0 { 1.0 } else { -1.0 };
            acc += sign * sigma[idx as usize] * bj;
        }
        *ai = acc;
    }
    Ok(a)
}

/// Derivative of the factored polynomial at its `i`-th pinned root
/// (`i` zero-based): `Π_{j≠i} (x_i - x_j) · Σ_j b_j x_i^j`.
pub fn derivative_at_root(x: &PointConfig, i: usize, b: &[f64]) -> Result<f64> {
    let pts = x.points();
    if i >= pts.len() {
        return Err(Error::IndexOutOfRange { index: i, max: pts.len() - 1 });
    }
    let xi = pts[i];
    let prod: f64 = pts
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, &xj)| xi - xj)
        .product();
    Ok(prod * poly_eval(b, xi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{poly_deriv_eval, poly_mul};

    fn pc(pts: &[f64]) -> PointConfig {
        PointConfig::new(pts.to_vec()).unwrap()
    }

    #[test]
    fn linear_factor() {
        // x - r
        let a = coeffs_from_factorization(&pc(&[3.0]), &[1.0]).unwrap();
        assert_eq!(a, vec![-3.0, 1.0]);
    }

    #[test]
    fn quadratic_from_two_roots() {
        // (x-1)(x-2) = 2 - 3x + x^2
        let a = coeffs_from_factorization(&pc(&[1.0, 2.0]), &[1.0]).unwrap();
        assert_eq!(a, vec![2.0, -3.0, 1.0]);
    }

    #[test]
    fn difference_of_squares() {
        // (x-1)(x+1) = -1 + x^2
        let a = coeffs_from_factorization(&pc(&[1.0]), &[1.0, 1.0]).unwrap();
        assert_eq!(a, vec![-1.0, 0.0, 1.0]);
    }

    #[test]
    fn matches_direct_product() {
        let x = pc(&[0.5, -1.2, 2.1]);
        let b = [0.3, -0.8, 1.1, 0.4];
        let a = coeffs_from_factorization(&x, &b).unwrap();
        let mut lin = vec![1.0];
        for &xi in x.points() {
            lin = poly_mul(&lin, &[-xi, 1.0]);
        }
        let direct = poly_mul(&lin, &b);
        let scale: f64 = direct.iter().map(|c| c.abs()).fold(0.0, f64::max);
        for (u, v) in a.iter().zip(&direct) {
            assert!((u - v).abs() <= 1e-12 * scale);
        }
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(derivative_at_root(&pc(&[4.0]), 0, &[1.0]).unwrap(), 1.0);
        let x = pc(&[1.0, 2.0]);
        assert_eq!(derivative_at_root(&x, 0, &[1.0]).unwrap(), -1.0);
        assert_eq!(derivative_at_root(&x, 1, &[1.0]).unwrap(), 1.0);
    }

    #[test]
    fn derivative_matches_expanded_polynomial() {
        let x = pc(&[0.4, -0.9, 1.7]);
        let b = [1.2, -0.5, 0.8];
        let a = coeffs_from_factorization(&x, &b).unwrap();
        for i in 0..x.k() {
            let lhs = derivative_at_root(&x, i, &b).unwrap();
            let rhs = poly_deriv_eval(&a, x.points()[i]);
            assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));
        }
    }

    #[test]
    fn index_out_of_range() {
        assert!(derivative_at_root(&pc(&[1.0]), 1, &[1.0]).is_err());
    }
}

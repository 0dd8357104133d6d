use crate::error::{Error, Result};

use super::types::{Partition, PointConfig};
use super::vandermonde::vandermonde_det;

/// All elementary symmetric polynomials `σ_0, ..., σ_k` of the points,
/// computed by expanding `Π (1 + x_i z)`.
pub fn elem_sym_all(x: &PointConfig) -> Vec<f64> {
    let pts = x.points();
    let mut sigma = vec![0.0; pts.len() + 1];
    sigma[0] = 1.0;
    for (m, &p) in pts.iter().enumerate() {
        for i in (1..=m + 1).rev() {
            sigma[i] += p * sigma[i - 1];
        }
    }
    sigma
}

/// `σ_i(x)`: zero outside `0..=k`, one at `i = 0`.
pub fn elem_sym(x: &PointConfig, i: i64) -> f64 {
    if i < 0 || i > x.k() as i64 {
        return 0.0;
    }
    elem_sym_all(x)[i as usize]
}

/// Schur function `S_λ(x)` via the bialternant ratio
/// `det(x_i^{λ_{k-j+1}+j-1}) / Π_{i<j}(x_j - x_i)` with row scaling.
pub fn schur(lambda: &Partition, x: &PointConfig) -> Result<f64> {
    let k = x.k();
    if lambda.len() > k {
        return Err(Error::PartitionTooLong { len: lambda.len(), k });
    }
    let mut padded = vec![0usize; k];
    padded[..lambda.len()].copy_from_slice(lambda.parts());

    // Column j (0-based) carries exponent λ_{k-1-j} + j.
    let exponents: Vec<usize> = (0..k).map(|j| padded[k - 1 - j] + j).collect();
    let mut m = vec![vec![0.0f64; k]; k];
    for (i, &xi) in x.points().iter().enumerate() {
        for (j, &e) in exponents.iter().enumerate() {
            m[i][j] = xi.powi(e as i32);
        }
    }
    Ok(scaled_det(&mut m) / vandermonde_det(x))
}

/// Determinant with per-row scaling and partial pivoting. Rows are scaled to
/// unit max-norm first so that wildly different monomial magnitudes do not
/// defeat the pivot choice.
#[allow(clippy::needless_range_loop)] // index math mirrors the formulas
fn scaled_det(m: &mut [Vec<f64>]) -> f64 {
    let k = m.len();
    let mut det = 1.0;
    for row in m.iter_mut() {
        let s = row.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        if s == 0.0 {
            return 0.0;
        }
        for v in row.iter_mut() {
            *v /= s;
        }
        det *= s;
    }
    for col in 0..k {
        let pivot = (col..k)
            .max_by(|&a, &b| m[a][col].abs().partial_cmp(&m[b][col].abs()).unwrap())
            .unwrap();
        if m[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for row in col + 1..k {
            let f = m[row][col] / m[col][col];
            for j in col..k {
                m[row][j] -= f * m[col][j];
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pc(pts: &[f64]) -> PointConfig {
        PointConfig::new(pts.to_vec()).unwrap()
    }

    #[test]
    fn sigma_examples() {
        let x = pc(&[1.0, 2.0, 3.0]);
        assert_eq!(elem_sym(&x, 0), 1.0);
        assert_eq!(elem_sym(&x, 4), 0.0);
        assert_eq!(elem_sym(&x, -1), 0.0);
        // all 2-subsets: 1*2 + 1*3 + 2*3
        assert_eq!(elem_sym(&x, 2), 11.0);
        assert_eq!(elem_sym(&x, 1), 6.0);
        assert_eq!(elem_sym(&x, 3), 6.0);
    }

    #[test]
    fn sigma_permutation_invariant() {
        let a = elem_sym_all(&pc(&[0.3, -1.2, 2.0, 0.9]));
        let b = elem_sym_all(&pc(&[2.0, 0.9, 0.3, -1.2]));
        for (u, v) in a.iter().zip(&b) {
            assert!((u - v).abs() <= 1e-12 * (1.0 + v.abs()));
        }
    }

    #[test]
    fn sigma_alternating_sum_identity() {
        // Σ (-1)^i σ_i = Π (1 - x_i)
        let pts = [0.7, -0.4, 1.9, -1.1, 0.2];
        let x = pc(&pts);
        let lhs: f64 = elem_sym_all(&x)
            .iter()
            .enumerate()
            .map(|(i, &s)| if i % 2 == 0 { s } else { -s })
            .sum();
        let rhs: f64 = pts.iter().map(|p| 1.0 - p).product();
        assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));
    }

    #[test]
    fn schur_empty_partition_is_one() {
        let x = pc(&[0.4, -1.3, 2.2]);
        let s = schur(&Partition::new(vec![]).unwrap(), &x).unwrap();
        assert!((s - 1.0).abs() < 1e-12);
    }

    #[test]
    fn schur_single_row_single_point() {
        // S_{(m)}(c) = c^m
        let x = pc(&[1.5]);
        let s = schur(&Partition::new(vec![3]).unwrap(), &x).unwrap();
        assert!((s - 1.5f64.powi(3)).abs() < 1e-12);
    }

    #[test]
    fn schur_row_one_is_sigma_1() {
        let x = pc(&[0.8, -0.3]);
        let s = schur(&Partition::new(vec![1, 0]).unwrap(), &x).unwrap();
        assert!((s - 0.5).abs() < 1e-12);
    }

    #[test]
    fn schur_h2_two_points() {
        // S_{(2,0)}(1,2) = h_2(1,2) = 1 + 2 + 4
        let x = pc(&[1.0, 2.0]);
        let s = schur(&Partition::new(vec![2, 0]).unwrap(), &x).unwrap();
        assert!((s - 7.0).abs() < 1e-12);
    }

    #[test]
    fn schur_symmetric_in_points() {
        let lam = Partition::new(vec![3, 1, 1]).unwrap();
        let a = schur(&lam, &pc(&[0.6, -1.4, 1.1])).unwrap();
        let b = schur(&lam, &pc(&[1.1, 0.6, -1.4])).unwrap();
        assert!((a - b).abs() <= 1e-9 * a.abs().max(1.0));
    }

    #[test]
    fn partition_longer_than_k_rejected() {
        let lam = Partition::new(vec![1, 1, 1]).unwrap();
        assert!(schur(&lam, &pc(&[0.5, 1.5])).is_err());
    }
}

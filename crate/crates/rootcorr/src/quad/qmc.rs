//! Quasi-random integration over a box with randomized shifts. A Kronecker
//! (irrational-rotation) sequence gives the low-discrepancy point set; the
//! spread of the per-shift means gives a statistical error indicator.

use rand::Rng;

use crate::rng::stream_rng;

const PRIMES: [u64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// Number of independent random shifts; the error estimate is the standard
/// error over these replicas.
pub const SHIFTS: usize = 16;

pub struct QmcResult {
    pub value: f64,
    pub error: f64,
    pub evals: usize,
    pub converged: bool,
}

/// Integrates `f` over `Π [lo_i, hi_i]` with `points_per_shift` Kronecker
/// points per replica. Deterministic for a fixed `seed`.
pub fn qmc_box(
    f: &mut dyn FnMut(&[f64]) -> f64,
    lo: &[f64],
    hi: &[f64],
    points_per_shift: usize,
    seed: u64,
    rel_tol: f64,
    abs_tol: f64,
) -> QmcResult {
    let m = lo.len();
    assert!(m <= PRIMES.len(), "dimension too large for the Kronecker vector");
    let alpha: Vec<f64> = PRIMES[..m].iter().map(|&p| (p as f64).sqrt().fract()).collect();
    let vol: f64 = lo.iter().zip(hi).map(|(a, b)| b - a).product();

    let mut means = [0.0f64; SHIFTS];
    let mut pt = vec![0.0f64; m];
    for (r, mean) in means.iter_mut().enumerate() {
        let mut rng = stream_rng(seed, r as u64);
        let shift: Vec<f64> = (0..m).map(|_| rng.random::<f64>()).collect();
        let mut acc = 0.0;
        let mut comp = 0.0; // Kahan compensation
        for i in 0..points_per_shift {
            for j in 0..m {
                let u = ((i + 1) as f64 * alpha[j] + shift[j]).fract();
                pt[j] = lo[j] + (hi[j] - lo[j]) * u;
            }
            let y = f(&pt) - comp;
            let t = acc + y;
            comp = (t - acc) - y;
            acc = t;
        }
        *mean = vol * acc / points_per_shift as f64;
    }

    let value = means.iter().sum::<f64>() / SHIFTS as f64;
    let var = means.iter().map(|q| (q - value) * (q - value)).sum::<f64>() / (SHIFTS - 1) as f64;
    let error = (var / SHIFTS as f64).sqrt();
    let converged = error <= abs_tol.max(rel_tol * value.abs());
    QmcResult { value, error, evals: SHIFTS * points_per_shift, converged }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_cube_volume() {
        let mut f = |_: &[f64]| 1.0;
        let r = qmc_box(&mut f, &[0.0; 4], &[1.0; 4], 1 << 12, 0, 1e-6, 1e-12);
        assert!((r.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn product_of_gaussians_on_box() {
        // Wide box captures nearly all the mass of e^{-|p|^2} in 4-d.
        let mut f = |p: &[f64]| p.iter().map(|t| (-t * t).exp()).product::<f64>();
        let r = qmc_box(&mut f, &[-7.0; 4], &[7.0; 4], 1 << 14, 1, 1e-4, 0.0);
        let exact = std::f64::consts::PI * std::f64::consts::PI;
        assert!((r.value - exact).abs() < 5.0 * r.error.max(1e-4 * exact), "value {} error {}", r.value, r.error);
    }

    #[test]
    fn deterministic_given_seed() {
        let mut f = |p: &[f64]| (p[0] + p[1]).sin();
        let a = qmc_box(&mut f, &[0.0; 2], &[1.0; 2], 1000, 5, 1e-6, 0.0);
        let b = qmc_box(&mut f, &[0.0; 2], &[1.0; 2], 1000, 5, 1e-6, 0.0);
        assert_eq!(a.value, b.value);
        assert_eq!(a.error, b.error);
    }
}

//! Monte Carlo route: `ρ_k` as an expectation over sampled tail
//! coefficients. Batches run on splittable substreams, so the estimate is
//! identical for a fixed `(seed, samples)` regardless of parallelism.

use rayon::prelude::*;

use crate::error::Result;
use crate::models::CoefficientModel;
use crate::poly::{newton_solve_in_place, poly_deriv_eval, poly_eval, PointConfig};
use crate::quad::Estimate;
use crate::rng::stream_rng;

/// Effort controls for the Monte Carlo estimators.
#[derive(Debug, Clone, Copy, serde::Serialize, serde::Deserialize)]
pub struct MonteCarloSpec {
    pub samples: usize,
    pub seed: u64,
    /// Samples per substream; also the granularity of parallelism.
    pub batch: usize,
}

impl Default for MonteCarloSpec {
    fn default() -> Self {
        Self { samples: 1_000_000, seed: 0, batch: 65_536 }
    }
}

impl MonteCarloSpec {
    pub fn new(samples: usize, seed: u64) -> Self {
        Self { samples, seed, ..Default::default() }
    }

    pub(crate) fn batch_sizes(&self) -> Vec<usize> {
        assert!(self.samples > 0 && self.batch > 0);
        let full = self.samples / self.batch;
        let rem = self.samples % self.batch;
        let mut sizes = vec![self.batch; full];
        if rem > 0 {
            sizes.push(rem);
        }
        sizes
    }
}

/// A Monte Carlo estimate plus a heavy-tail diagnostic: `tail_warning` is
/// set when some batch mean sits more than five standard errors from the
/// pooled mean, a sign the integrand variance is badly resolved.
#[derive(Debug, Clone, Copy)]
pub struct McEstimate {
    pub estimate: Estimate,
    pub tail_warning: bool,
}

struct BatchStats {
    sum: f64,
    sum_sq: f64,
    count: usize,
}

/// `ρ_k(x)` as the expectation over the tail coefficients `ξ_k, ..., ξ_n`:
///
/// `Π|x_i-x_j|^{-1} · E[ Π_i |G'(x_i)| · Π_{i<k} f_i(η_i(x)) ]`
///
/// where `G` carries coefficients `(η(x), ξ)` and `η` pins the zeros at `x`.
/// The reported error is the sample standard error.
#[allow(clippy::needless_range_loop)] // index math mirrors the formulas
pub fn rho_k_montecarlo(
    model: &CoefficientModel,
    x: &PointConfig,
    spec: &MonteCarloSpec,
) -> Result<McEstimate> {
    let k = x.k();
    let n = model.degree();
    let pts = x.points();

    let sizes = spec.batch_sizes();
    let stats: Vec<BatchStats> = sizes
        .par_iter()
        .enumerate()
        .map(|(b, &size)| {
            let mut rng = stream_rng(spec.seed, b as u64);
            let mut coeffs = vec![0.0f64; n + 1];
            let mut sum = 0.0;
            let mut comp = 0.0;
            let mut sum_sq = 0.0;
            for _ in 0..size {
                model.sample_tail_into(k, &mut rng, &mut coeffs[k..]);
                // η via the in-place Vandermonde solve on the low block.
                for i in 0..k {
                    let xi = pts[i];
                    coeffs[i] = -xi.powi(k as i32) * poly_eval(&coeffs[k..], xi);
                }
                newton_solve_in_place(pts, &mut coeffs[..k]);
                let mut w: f64 = pts.iter().map(|&xi| poly_deriv_eval(&coeffs, xi).abs()).product();
                for i in 0..k {
                    w *= model.density(i).expect("i < k <= n").pdf(coeffs[i]);
                    if w == 0.0 {
                        break;
                    }
                }
                let y = w - comp;
                let t = sum + y;
                comp = (t - sum) - y;
                sum = t;
                sum_sq += w * w;
            }
            BatchStats { sum, sum_sq, count: size }
        })
        .collect();

    let total: usize = stats.iter().map(|s| s.count).sum();
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut sum_sq = 0.0;
    for s in &stats {
        let y = s.sum - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        sum_sq += s.sum_sq;
    }
    let mean = sum / total as f64;
    let var = (sum_sq / total as f64 - mean * mean).max(0.0);
    let stderr = (var / total as f64).sqrt();

    let tail_warning = stats.iter().any(|s| {
        s.count > 1 && {
            let batch_mean = s.sum / s.count as f64;
            let batch_se = (var / s.count as f64).sqrt();
            batch_se > 0.0 && (batch_mean - mean).abs() > 5.0 * batch_se
        }
    });

    let prefactor = x.abs_vandermonde();
    Ok(McEstimate {
        estimate: Estimate {
            value: mean / prefactor,
            error: stderr / prefactor,
            evals: total,
            converged: true,
        },
        tail_warning,
    })
}

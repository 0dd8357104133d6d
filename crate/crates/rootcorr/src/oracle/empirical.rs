//! Empirical estimators over sampled polynomials: per-bin root intensity,
//! product correlations over disjoint boxes, and the probability that all
//! zeros are real. Samples that fail root certification are discarded and
//! reported as a rate, keeping the counts trustworthy.

use rayon::prelude::*;

use crate::correlation::MonteCarloSpec;
use crate::error::{Error, Result};
use crate::models::CoefficientModel;
use crate::quad::Estimate;
use crate::rng::stream_rng;

use super::roots::real_roots;

/// A family of pairwise disjoint half-open boxes `[lo, hi)`. Half-open
/// endpoints keep counts additive across adjacent bins.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxFamily {
    boxes: Vec<(f64, f64)>,
}

impl BoxFamily {
    pub fn new(boxes: Vec<(f64, f64)>) -> Result<Self> {
        for &(lo, hi) in &boxes {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::InvalidConfig(format!("bad box [{lo}, {hi})")));
            }
        }
        let mut sorted = boxes.clone();
        sorted.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        for w in sorted.windows(2) {
            if w[1].0 < w[0].1 {
                return Err(Error::InvalidConfig(format!(
                    "boxes [{}, {}) and [{}, {}) overlap",
                    w[0].0, w[0].1, w[1].0, w[1].1
                )));
            }
        }
        Ok(Self { boxes })
    }

    /// Equal-width bins partitioning `[lo, hi)`.
    pub fn grid(lo: f64, hi: f64, bins: usize) -> Result<Self> {
        let step = (hi - lo) / bins as f64;
        Self::new((0..bins).map(|i| (lo + i as f64 * step, lo + (i + 1) as f64 * step)).collect())
    }

    pub fn boxes(&self) -> &[(f64, f64)] {
        &self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }
}

/// Outcome of an empirical run: per-box estimates plus the certification
/// discard rate.
#[derive(Debug, Clone)]
pub struct EmpiricalProfile {
    pub estimates: Vec<Estimate>,
    pub discard_rate: f64,
}

struct BinAccum {
    sums: Vec<f64>,
    sum_sqs: Vec<f64>,
    kept: usize,
    discarded: usize,
}

fn run_batches<F>(model: &CoefficientModel, spec: &MonteCarloSpec, nstats: usize, stat: F) -> BinAccum
where
    F: Fn(&super::roots::RootSet, &mut [f64]) + Sync,
{
    let sizes = batch_sizes(spec);
    let partials: Vec<BinAccum> = sizes
        .par_iter()
        .enumerate()
        .map(|(b, &size)| {
            let mut rng = stream_rng(spec.seed, b as u64);
            let mut acc = BinAccum {
                sums: vec![0.0; nstats],
                sum_sqs: vec![0.0; nstats],
                kept: 0,
                discarded: 0,
            };
            let mut stats = vec![0.0; nstats];
            for _ in 0..size {
                let coeffs = model.sample_coeffs(&mut rng);
                match real_roots(&coeffs) {
                    Ok(rs) => {
                        stats.iter_mut().for_each(|s| *s = 0.0);
                        stat(&rs, &mut stats);
                        for (i, &s) in stats.iter().enumerate() {
                            acc.sums[i] += s;
                            acc.sum_sqs[i] += s * s;
                        }
                        acc.kept += 1;
                    }
                    Err(_) => acc.discarded += 1,
                }
            }
            acc
        })
        .collect();

    let mut total = BinAccum {
        sums: vec![0.0; nstats],
        sum_sqs: vec![0.0; nstats],
        kept: 0,
        discarded: 0,
    };
    for p in partials {
        for i in 0..nstats {
            total.sums[i] += p.sums[i];
            total.sum_sqs[i] += p.sum_sqs[i];
        }
        total.kept += p.kept;
        total.discarded += p.discarded;
    }
    total
}

fn batch_sizes(spec: &MonteCarloSpec) -> Vec<usize> {
    assert!(spec.samples > 0 && spec.batch > 0);
    let full = spec.samples / spec.batch;
    let rem = spec.samples % spec.batch;
    let mut sizes = vec![spec.batch; full];
    if rem > 0 {
        sizes.push(rem);
    }
    sizes
}

fn finish(acc: BinAccum) -> EmpiricalProfile {
    let n = acc.kept.max(1) as f64;
    let estimates = acc
        .sums
        .iter()
        .zip(&acc.sum_sqs)
        .map(|(&s, &sq)| {
            let mean = s / n;
            let var = (sq / n - mean * mean).max(0.0);
            Estimate { value: mean, error: (var / n).sqrt(), evals: acc.kept, converged: true }
        })
        .collect();
    EmpiricalProfile {
        estimates,
        discard_rate: acc.discarded as f64 / (acc.kept + acc.discarded).max(1) as f64,
    }
}

/// Mean root count per bin with standard errors: estimates `∫_bin ρ_1`.
pub fn empirical_intensity(
    model: &CoefficientModel,
    bins: &BoxFamily,
    spec: &MonteCarloSpec,
) -> EmpiricalProfile {
    let boxes = bins.boxes().to_vec();
    let acc = run_batches(model, spec, boxes.len(), |rs, out| {
        for (i, &(lo, hi)) in boxes.iter().enumerate() {
            out[i] = rs.count_in(lo, hi) as f64;
        }
    });
    finish(acc)
}

/// Monte Carlo estimate of `E[Π_i μ(B_i)]`, i.e. `∫_{B_1}...∫_{B_k} ρ_k`.
pub fn empirical_correlation(
    model: &CoefficientModel,
    boxes: &BoxFamily,
    spec: &MonteCarloSpec,
) -> EmpiricalProfile {
    let fam = boxes.boxes().to_vec();
    let acc = run_batches(model, spec, 1, |rs, out| {
        out[0] = fam.iter().map(|&(lo, hi)| rs.count_in(lo, hi) as f64).product();
    });
    finish(acc)
}

/// Fraction of sampled polynomials whose real-root count equals the degree,
/// with binomial standard error.
pub fn empirical_prob_all_real(model: &CoefficientModel, spec: &MonteCarloSpec) -> EmpiricalProfile {
    let n = model.degree();
    let acc = run_batches(model, spec, 1, |rs, out| {
        out[0] = if rs.count() == n { 1.0 } else { 0.0 };
    });
    let mut profile = finish(acc);
    // Binomial standard error for the indicator mean.
    let kept = profile.estimates[0].evals.max(1) as f64;
    let p = profile.estimates[0].value;
    profile.estimates[0].error = (p * (1.0 - p) / kept).sqrt();
    profile
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mc(samples: usize, seed: u64) -> MonteCarloSpec {
        MonteCarloSpec { samples, seed, batch: 4096 }
    }

    #[test]
    fn box_family_rejects_overlap() {
        assert!(BoxFamily::new(vec![(0.0, 1.0), (0.5, 2.0)]).is_err());
        assert!(BoxFamily::new(vec![(0.0, 1.0), (1.0, 2.0)]).is_ok());
        assert!(BoxFamily::new(vec![(1.0, 0.5)]).is_err());
    }

    #[test]
    fn linear_always_one_root() {
        let m = CoefficientModel::gaussian(1, 1.0).unwrap();
        let p = empirical_prob_all_real(&m, &mc(20_000, 3));
        assert_eq!(p.estimates[0].value, 1.0);
        assert_eq!(p.discard_rate, 0.0);
    }

    #[test]
    fn cauchy_intensity_bin() {
        // n = 1 Gaussian: root is standard Cauchy; P(root in [-0.5, 0.5]) =
        // 2 atan(0.5) / pi.
        let m = CoefficientModel::gaussian(1, 1.0).unwrap();
        let bins = BoxFamily::new(vec![(-0.5, 0.5)]).unwrap();
        let prof = empirical_intensity(&m, &bins, &mc(200_000, 5));
        let expect = 2.0 * 0.5f64.atan() / std::f64::consts::PI;
        let e = &prof.estimates[0];
        assert!((e.value - expect).abs() < 4.0 * e.error, "{} ± {} vs {expect}", e.value, e.error);
    }

    #[test]
    fn exponential_no_positive_roots() {
        let m = CoefficientModel::exponential(3).unwrap();
        let bins = BoxFamily::new(vec![(0.1, 1.0)]).unwrap();
        let prof = empirical_intensity(&m, &bins, &mc(20_000, 9));
        assert_eq!(prof.estimates[0].value, 0.0);
    }

    #[test]
    fn one_root_cannot_fill_two_boxes() {
        let m = CoefficientModel::uniform(1).unwrap();
        let boxes = BoxFamily::new(vec![(-2.0, -0.5), (0.5, 2.0)]).unwrap();
        let prof = empirical_correlation(&m, &boxes, &mc(10_000, 1));
        assert_eq!(prof.estimates[0].value, 0.0);
    }

    #[test]
    fn deterministic_given_seed() {
        let m = CoefficientModel::gaussian(3, 1.0).unwrap();
        let bins = BoxFamily::grid(-2.0, 2.0, 4).unwrap();
        let a = empirical_intensity(&m, &bins, &mc(30_000, 77));
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(|| empirical_intensity(&m, &bins, &mc(30_000, 77)));
        for (x, y) in a.estimates.iter().zip(&b.estimates) {
            assert_eq!(x.value, y.value);
        }
    }

    #[test]
    fn monotone_in_box_size() {
        let m = CoefficientModel::gaussian(2, 1.0).unwrap();
        let small = BoxFamily::new(vec![(-0.5, 0.5)]).unwrap();
        let large = BoxFamily::new(vec![(-1.5, 1.5)]).unwrap();
        let spec = mc(50_000, 13);
        let a = empirical_correlation(&m, &small, &spec);
        let b = empirical_correlation(&m, &large, &spec);
        // Same seed, paired samples: enlarging the box never loses roots.
        assert!(b.estimates[0].value >= a.estimates[0].value);
    }
}

//! Coefficient distribution models: density evaluation and sampling for the
//! independent coefficients `ξ_0, ..., ξ_n`.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use crate::error::{Error, Result};

/// Support of a single coefficient density. Infinite endpoints are allowed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Support {
    pub lo: f64,
    pub hi: f64,
}

impl Support {
    pub const ALL: Support = Support { lo: f64::NEG_INFINITY, hi: f64::INFINITY };

    pub fn bounded(lo: f64, hi: f64) -> Self {
        Support { lo, hi }
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn contains(&self, t: f64) -> bool {
        t >= self.lo && t <= self.hi
    }
}

type PdfFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
type SampleFn = Arc<dyn Fn(&mut ChaCha8Rng) -> f64 + Send + Sync>;

/// Density of one coefficient.
#[derive(Clone)]
pub enum Density {
    /// Centered normal with standard deviation `scale`.
    Gaussian { scale: f64 },
    /// Uniform on `[-1, 1]`.
    Uniform,
    /// Rate-1 exponential on `[0, ∞)`.
    Exponential,
    /// User-supplied density with an explicit sampler and declared support.
    Custom { pdf: PdfFn, sampler: SampleFn, support: Support },
}

impl fmt::Debug for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Density::Gaussian { scale } => write!(f, "Gaussian{{scale: {scale}}}"),
            Density::Uniform => write!(f, "Uniform[-1,1]"),
            Density::Exponential => write!(f, "Exponential(1)"),
            Density::Custom { support, .. } => write!(f, "Custom{{support: {support:?}}}"),
        }
    }
}

impl Density {
    pub fn pdf(&self, t: f64) -> f64 {
        match self {
            Density::Gaussian { scale } => {
                let z = t / scale;
                (-0.5 * z * z).exp() / (scale * (2.0 * std::f64::consts::PI).sqrt())
            }
            Density::Uniform => {
                if (-1.0..=1.0).contains(&t) {
                    0.5
                } else {
                    0.0
                }
            }
            Density::Exponential => {
                if t >= 0.0 {
                    (-t).exp()
                } else {
                    0.0
                }
            }
            Density::Custom { pdf, support, .. } => {
                if support.contains(t) {
                    pdf(t)
                } else {
                    0.0
                }
            }
        }
    }

    /// Cumulative distribution function; `None` for custom densities.
    pub fn cdf(&self, t: f64) -> Option<f64> {
        match self {
            Density::Gaussian { scale } => Some(0.5 * erfc_neg_half(t / scale)),
            Density::Uniform => Some(((t + 1.0) / 2.0).clamp(0.0, 1.0)),
            Density::Exponential => Some(if t < 0.0 { 0.0 } else { 1.0 - (-t).exp() }),
            Density::Custom { .. } => None,
        }
    }

    pub fn sample(&self, rng: &mut ChaCha8Rng) -> f64 {
        match self {
            Density::Gaussian { scale } => {
                let z: f64 = StandardNormal.sample(rng);
                scale * z
            }
            Density::Uniform => rng.random_range(-1.0..=1.0),
            Density::Exponential => Exp1.sample(rng),
            Density::Custom { sampler, .. } => sampler(rng),
        }
    }

    pub fn support(&self) -> Support {
        match self {
            Density::Gaussian { .. } => Support::ALL,
            Density::Uniform => Support::bounded(-1.0, 1.0),
            Density::Exponential => Support { lo: 0.0, hi: f64::INFINITY },
            Density::Custom { support, .. } => *support,
        }
    }

    /// True when the pdf is smooth on all of R (no jumps or kinks), which
    /// lets polynomial-based cubature rules trust their error estimates.
    /// Custom densities are conservatively reported non-smooth.
    pub fn is_smooth(&self) -> bool {
        matches!(self, Density::Gaussian { .. })
    }
}

/// Joint model for the `n + 1` independent coefficients of a degree-`n`
/// random polynomial.
#[derive(Debug, Clone)]
pub struct CoefficientModel {
    densities: Vec<Density>,
}

impl CoefficientModel {
    pub fn new(densities: Vec<Density>) -> Result<Self> {
        if densities.is_empty() {
            return Err(Error::InvalidConfig("model needs at least one coefficient".into()));
        }
        for d in &densities {
            if let Density::Gaussian { scale } = d {
                if !(scale.is_finite() && *scale > 0.0) {
                    return Err(Error::InvalidConfig(format!("bad Gaussian scale {scale}")));
                }
            }
        }
        Ok(Self { densities })
    }

    /// Equal-scale Gaussian coefficients.
    pub fn gaussian(n: usize, scale: f64) -> Result<Self> {
        Self::new(vec![Density::Gaussian { scale }; n + 1])
    }

    /// Per-index Gaussian scales `v_0, ..., v_n`.
    pub fn gaussian_scales(scales: &[f64]) -> Result<Self> {
        Self::new(scales.iter().map(|&v| Density::Gaussian { scale: v }).collect())
    }

    pub fn uniform(n: usize) -> Result<Self> {
        Self::new(vec![Density::Uniform; n + 1])
    }

    pub fn exponential(n: usize) -> Result<Self> {
        Self::new(vec![Density::Exponential; n + 1])
    }

    /// Polynomial degree `n`.
    pub fn degree(&self) -> usize {
        self.densities.len() - 1
    }

    pub fn density(&self, i: usize) -> Result<&Density> {
        self.densities.get(i).ok_or(Error::IndexOutOfRange { index: i, max: self.degree() })
    }

    pub fn pdf(&self, i: usize, t: f64) -> Result<f64> {
        Ok(self.density(i)?.pdf(t))
    }

    pub fn sample(&self, i: usize, rng: &mut ChaCha8Rng) -> Result<f64> {
        Ok(self.density(i)?.sample(rng))
    }

    /// Draws a full coefficient vector `ξ_0, ..., ξ_n`.
    pub fn sample_coeffs(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        self.densities.iter().map(|d| d.sample(rng)).collect()
    }

    /// Draws only the tail `ξ_k, ..., ξ_n`.
    pub fn sample_tail(&self, k: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
        self.densities[k..].iter().map(|d| d.sample(rng)).collect()
    }

    /// Tail draw into a caller-provided buffer of length `n - k + 1`.
    pub fn sample_tail_into(&self, k: usize, rng: &mut ChaCha8Rng, out: &mut [f64]) {
        for (o, d) in out.iter_mut().zip(&self.densities[k..]) {
            *o = d.sample(rng);
        }
    }

    /// True when every coefficient density has bounded support, so that the
    /// correlation integrand lives in a computable box.
    pub fn all_supports_bounded(&self) -> bool {
        self.densities.iter().all(|d| d.support().is_bounded())
    }

    /// True when every coefficient density is smooth on R.
    pub fn all_smooth(&self) -> bool {
        self.densities.iter().all(|d| d.is_smooth())
    }

    pub fn supports(&self) -> Vec<Support> {
        self.densities.iter().map(|d| d.support()).collect()
    }

    /// `Some(scales)` when every coefficient is Gaussian.
    pub fn gaussian_family(&self) -> Option<Vec<f64>> {
        self.densities
            .iter()
            .map(|d| match d {
                Density::Gaussian { scale } => Some(*scale),
                _ => None,
            })
            .collect()
    }

    pub fn is_uniform_family(&self) -> bool {
        self.densities.iter().all(|d| matches!(d, Density::Uniform))
    }

    pub fn is_exponential_family(&self) -> bool {
        self.densities.iter().all(|d| matches!(d, Density::Exponential))
    }
}

// erfc(-x/√2), i.e. 2·Φ(x), via the Abramowitz-Stegun 7.1.26 rational
// approximation refined with one Newton-like correction. Accurate to ~1e-7,
// used only for KS-style sanity checks, not in any formula path.
fn erfc_neg_half(x: f64) -> f64 {
    let z = x / std::f64::consts::SQRT_2;
    1.0 + erf(z)
}

fn erf(x: f64) -> f64 {
    let sign = if x < 0.0 { -1.0 } else { 1.0 };
    let x = x.abs();
    let t = 1.0 / (1.0 + 0.3275911 * x);
    let y = 1.0
        - (((((1.061405429 * t - 1.453152027) * t) + 1.421413741) * t - 0.284496736) * t
            + 0.254829592)
            * t
            * (-x * x).exp();
    sign * y
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream_rng;

    #[test]
    fn uniform_pdf_values() {
        let m = CoefficientModel::uniform(3).unwrap();
        assert_eq!(m.pdf(0, 0.5).unwrap(), 0.5);
        assert_eq!(m.pdf(2, 2.0).unwrap(), 0.0);
    }

    #[test]
    fn exponential_pdf_value() {
        let m = CoefficientModel::exponential(1).unwrap();
        assert!((m.pdf(0, 1.0).unwrap() - (-1.0f64).exp()).abs() < 1e-15);
        assert_eq!(m.pdf(0, -0.1).unwrap(), 0.0);
    }

    #[test]
    fn index_out_of_range() {
        let m = CoefficientModel::uniform(2).unwrap();
        assert!(m.pdf(3, 0.0).is_err());
        assert!(m.sample(5, &mut stream_rng(0, 0)).is_err());
    }

    #[test]
    fn samples_stay_in_support() {
        let m = CoefficientModel::new(vec![Density::Uniform, Density::Exponential]).unwrap();
        let mut rng = stream_rng(1, 0);
        for _ in 0..1000 {
            let u = m.sample(0, &mut rng).unwrap();
            assert!((-1.0..=1.0).contains(&u));
            let e = m.sample(1, &mut rng).unwrap();
            assert!(e >= 0.0);
        }
    }

    #[test]
    fn gaussian_moments() {
        let m = CoefficientModel::gaussian(0, 1.0).unwrap();
        let mut rng = stream_rng(7, 0);
        let nsamp = 1_000_000usize;
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        for _ in 0..nsamp {
            let v = m.sample(0, &mut rng).unwrap();
            sum += v;
            sumsq += v * v;
        }
        let mean = sum / nsamp as f64;
        let var = sumsq / nsamp as f64 - mean * mean;
        assert!(mean.abs() < 4.0 / (nsamp as f64).sqrt());
        assert!((var - 1.0).abs() < 0.01);
    }

    #[test]
    fn deterministic_streams() {
        let m = CoefficientModel::gaussian(4, 2.0).unwrap();
        let a = m.sample_coeffs(&mut stream_rng(9, 3));
        let b = m.sample_coeffs(&mut stream_rng(9, 3));
        assert_eq!(a, b);
    }

    #[test]
    fn pdf_normalization() {
        // Trapezoid over a wide grid: built-ins integrate to 1. Tolerance is
        // set by the O(h) trapezoid error at the density jumps.
        for d in [Density::Gaussian { scale: 1.5 }, Density::Uniform, Density::Exponential] {
            let (lo, hi, steps) = (-60.0, 60.0, 4_000_000);
            let h = (hi - lo) / steps as f64;
            let mut total = 0.0;
            for i in 0..=steps {
                let t = lo + i as f64 * h;
                let w = if i == 0 || i == steps { 0.5 } else { 1.0 };
                total += w * d.pdf(t);
            }
            total *= h;
            assert!((total - 1.0).abs() < 1e-4, "{d:?} integrates to {total}");
        }
    }

    #[test]
    fn kolmogorov_smirnov_built_ins() {
        // 1e5 samples against the model CDF; 0.001-significance threshold is
        // 1.95 / sqrt(n). Fixed seed.
        for d in [Density::Gaussian { scale: 1.0 }, Density::Uniform, Density::Exponential] {
            let n = 100_000usize;
            let mut rng = stream_rng(1234, 0);
            let mut samples: Vec<f64> = (0..n).map(|_| d.sample(&mut rng)).collect();
            samples.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut ks: f64 = 0.0;
            for (i, &s) in samples.iter().enumerate() {
                let f = d.cdf(s).unwrap();
                ks = ks.max((f - i as f64 / n as f64).abs());
                ks = ks.max(((i + 1) as f64 / n as f64 - f).abs());
            }
            let threshold = 1.95 / (n as f64).sqrt();
            assert!(ks < threshold, "{d:?} KS = {ks}, threshold {threshold}");
        }
    }
}

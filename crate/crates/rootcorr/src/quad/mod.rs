//! Deterministic and stochastic integration over R^m and boxes with
//! possibly infinite sides.
//!
//! Strategy selection: adaptive Gauss-Kronrod for one dimension, adaptive
//! Genz-Malik cubature for a few dimensions, randomized-shift quasi-random
//! sampling above the cutover, where tensor subdivision stops paying.
//! Unbounded directions are compactified by substitution rather than
//! truncated.

mod cubature;
mod gk;
mod qmc;
mod transform;

pub use transform::{DimMap, Transform};

/// Dimension at and above which the default strategy switches from adaptive
/// subdivision to quasi-random sampling.
pub const QMC_CUTOVER_DIM: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Strategy {
    /// Adaptive below [`QMC_CUTOVER_DIM`], quasi-random at or above it.
    Auto,
    AdaptiveTensor,
    QuasiRandom,
}

/// Accuracy and effort controls for one integration call.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_evals: usize,
    pub transform: Transform,
    pub strategy: Strategy,
    /// Seed for the quasi-random shifts; ignored by the adaptive strategy.
    pub seed: u64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-8,
            abs_tol: 1e-12,
            max_evals: 2_000_000,
            transform: Transform::Algebraic,
            strategy: Strategy::Auto,
            seed: 0,
        }
    }
}

impl QuadratureSpec {
    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_max_evals(mut self, max_evals: usize) -> Self {
        self.max_evals = max_evals;
        self
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn assert_valid(&self) {
        assert!(self.rel_tol > 0.0 && self.abs_tol >= 0.0, "tolerances must be positive");
        assert!(self.max_evals > 0, "max_evals must be positive");
    }

    fn adaptive(&self, m: usize) -> bool {
        match self.strategy {
            Strategy::AdaptiveTensor => true,
            Strategy::QuasiRandom => false,
            Strategy::Auto => m < QMC_CUTOVER_DIM,
        }
    }
}

/// An integral estimate: value, error indicator (deterministic bound for the
/// adaptive strategies, standard error for quasi-random), evaluation count
/// and a convergence flag. Non-convergence is reported, not thrown.
#[derive(Debug, Clone, Copy)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
    pub evals: usize,
    pub converged: bool,
}

impl Estimate {
    /// Combines independent error indicators of a product/sum pipeline step.
    pub fn map_value(self, f: impl FnOnce(f64) -> f64, scale: f64) -> Estimate {
        Estimate { value: f(self.value), error: self.error * scale.abs(), ..self }
    }
}

/// Integrates `f` over the whole real line.
pub fn integrate_1d(f: impl Fn(f64) -> f64, spec: &QuadratureSpec) -> Estimate {
    integrate_intervals_1d(f, &[(f64::NEG_INFINITY, f64::INFINITY)], spec)
}

/// Integrates `f` over a union of disjoint intervals (endpoints may be
/// infinite). Errors and evaluation counts add across pieces.
pub fn integrate_intervals_1d(
    f: impl Fn(f64) -> f64,
    intervals: &[(f64, f64)],
    spec: &QuadratureSpec,
) -> Estimate {
    spec.assert_valid();
    let mut total = Estimate { value: 0.0, error: 0.0, evals: 0, converged: true };
    let per_piece = spec.max_evals / intervals.len().max(1);
    for &(lo, hi) in intervals {
        let map = DimMap::for_interval(lo, hi, spec.transform);
        let mut g = |u: f64| {
            let (t, jac) = map.apply(u);
            let v = f(t);
            if v == 0.0 {
                0.0
            } else {
                v * jac
            }
        };
        // A handful of seed panels so interior kinks are seen early.
        let r = gk::adaptive_gk(&mut g, -1.0, 1.0, spec.rel_tol, 0.5 * spec.abs_tol, per_piece, 8);
        total.value += r.value;
        total.error += r.error;
        total.evals += r.evals;
        total.converged &= r.converged;
    }
    total
}

/// Integrates `f` over all of R^m.
pub fn integrate_nd(f: impl Fn(&[f64]) -> f64, m: usize, spec: &QuadratureSpec) -> Estimate {
    let bounds = vec![(f64::NEG_INFINITY, f64::INFINITY); m];
    integrate_box(f, &bounds, spec)
}

/// Integrates `f` over `Π [lo_i, hi_i]`; any side may be infinite.
pub fn integrate_box(
    f: impl Fn(&[f64]) -> f64,
    bounds: &[(f64, f64)],
    spec: &QuadratureSpec,
) -> Estimate {
    spec.assert_valid();
    let m = bounds.len();
    assert!(m >= 1, "empty integration domain");
    let maps: Vec<DimMap> =
        bounds.iter().map(|&(lo, hi)| DimMap::for_interval(lo, hi, spec.transform)).collect();

    if m == 1 {
        let map = maps[0];
        return integrate_intervals_1d_inner(&f, map, spec);
    }

    let mut t = vec![0.0f64; m];
    let mut g = |u: &[f64]| {
        let mut jac = 1.0;
        for (i, (&ui, map)) in u.iter().zip(&maps).enumerate() {
            let (ti, j) = map.apply(ui);
            t[i] = ti;
            jac *= j;
        }
        let v = f(&t);
        if v == 0.0 {
            0.0
        } else {
            v * jac
        }
    };

    if spec.adaptive(m) {
        let r = gk_nd(&mut g, m, spec);
        Estimate { value: r.value, error: r.error, evals: r.evals, converged: r.converged }
    } else {
        let points = (spec.max_evals / qmc::SHIFTS).max(1);
        let r = qmc::qmc_box(&mut g, &vec![-1.0; m], &vec![1.0; m], points, spec.seed, spec.rel_tol, spec.abs_tol);
        Estimate { value: r.value, error: r.error, evals: r.evals, converged: r.converged }
    }
}

fn gk_nd(g: &mut dyn FnMut(&[f64]) -> f64, m: usize, spec: &QuadratureSpec) -> cubature::CubatureResult {
    cubature::genz_malik(g, &vec![-1.0; m], &vec![1.0; m], spec.rel_tol, spec.abs_tol, spec.max_evals)
}

fn integrate_intervals_1d_inner(f: &impl Fn(&[f64]) -> f64, map: DimMap, spec: &QuadratureSpec) -> Estimate {
    let mut g = |u: f64| {
        let (t, jac) = map.apply(u);
        let v = f(&[t]);
        if v == 0.0 {
            0.0
        } else {
            v * jac
        }
    };
    let r = gk::adaptive_gk(&mut g, -1.0, 1.0, spec.rel_tol, 0.5 * spec.abs_tol, spec.max_evals, 8);
    Estimate { value: r.value, error: r.error, evals: r.evals, converged: r.converged }
}

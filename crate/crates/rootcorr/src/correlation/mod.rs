//! Correlation-function evaluators for the real zeros of a random
//! polynomial with independent continuously distributed coefficients.
//!
//! Three routes to the same quantity:
//! - a deterministic quadrature of the explicit integral over the
//!   `n - k + 1` free tail parameters,
//! - a Monte Carlo expectation over sampled tail coefficients, and
//! - closed forms for the `k = n` diagonal case under the Gaussian,
//!   uniform and exponential families.
//!
//! Note on the `k = n` closed forms: the source displays index the
//! Vandermonde product by `k` where `n` is meant; the cross-route agreement
//! tests confirm the `n` reading.

mod closed_form;
mod montecarlo;
mod quadrature;

pub use closed_form::{gamma_half_int, rho_n_exponential, rho_n_gaussian, rho_n_uniform};
pub use montecarlo::{rho_k_montecarlo, McEstimate, MonteCarloSpec};
pub use quadrature::{prob_all_real, rho_k_quadrature, rho_theorem2_integrand, tail_bounds};

use crate::error::{Error, Result};
use crate::models::CoefficientModel;
use crate::poly::PointConfig;
use crate::quad::{Estimate, QuadratureSpec};

/// Evaluation route for a correlation query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Deterministic quadrature over the tail parameters.
    Theorem2,
    /// Monte Carlo expectation over sampled tail coefficients.
    Theorem1,
    ClosedForm,
    /// Closed form when available, quadrature while the tail dimension is
    /// affordable, Monte Carlo otherwise.
    Auto,
}

/// A `ρ_k` evaluation request.
#[derive(Debug, Clone)]
pub struct CorrelationQuery {
    pub model: CoefficientModel,
    pub x: PointConfig,
    pub method: Method,
    pub quad: QuadratureSpec,
    pub mc: MonteCarloSpec,
}

impl CorrelationQuery {
    pub fn new(model: CoefficientModel, x: PointConfig) -> Result<Self> {
        let (k, n) = (x.k(), model.degree());
        if k == 0 || k > n {
            return Err(Error::InvalidConfig(format!("need 1 <= k <= n, got k={k}, n={n}")));
        }
        Ok(Self {
            model,
            x,
            method: Method::Auto,
            quad: QuadratureSpec::default(),
            mc: MonteCarloSpec::default(),
        })
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }
}

/// Closed-form `ρ_n` for the covered families, if this query has one.
pub fn closed_form(model: &CoefficientModel, x: &PointConfig) -> Option<f64> {
    if x.k() != model.degree() {
        return None;
    }
    if let Some(scales) = model.gaussian_family() {
        return Some(rho_n_gaussian(x, &scales).expect("k = n by construction"));
    }
    if model.is_uniform_family() {
        return Some(rho_n_uniform(x));
    }
    if model.is_exponential_family() {
        return Some(rho_n_exponential(x));
    }
    None
}

/// Evaluates `ρ_k` by the query's method. `Auto` picks the closed form when
/// one exists, quadrature while the tail dimension stays at or below the
/// quasi-random cutover, and Monte Carlo beyond that.
pub fn rho(query: &CorrelationQuery) -> Result<Estimate> {
    let exact = |v: f64| Estimate { value: v, error: 0.0, evals: 0, converged: true };
    match query.method {
        Method::ClosedForm => closed_form(&query.model, &query.x)
            .map(exact)
            .ok_or_else(|| Error::InvalidConfig("no closed form for this query".into())),
        Method::Theorem2 => Ok(rho_k_quadrature(&query.model, &query.x, &query.quad)),
        Method::Theorem1 => Ok(rho_k_montecarlo(&query.model, &query.x, &query.mc)?.estimate),
        Method::Auto => {
            if let Some(v) = closed_form(&query.model, &query.x) {
                return Ok(exact(v));
            }
            let tail_dim = query.model.degree() - query.x.k() + 1;
            if tail_dim <= crate::quad::QMC_CUTOVER_DIM {
                Ok(rho_k_quadrature(&query.model, &query.x, &query.quad))
            } else {
                Ok(rho_k_montecarlo(&query.model, &query.x, &query.mc)?.estimate)
            }
        }
    }
}

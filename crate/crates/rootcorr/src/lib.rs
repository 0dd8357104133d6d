//! Correlation functions of real zeros of random polynomials.
//!
//! For a random polynomial `G(x) = ξ_n x^n + ... + ξ_0` with independent,
//! continuously distributed coefficients, this crate evaluates the k-point
//! correlation functions `ρ_k` of the point process of real zeros, through
//! three mutually checking routes:
//!
//! - an explicit deterministic integral over the free tail coefficients
//!   ([`correlation::rho_k_quadrature`]),
//! - a Monte Carlo expectation over sampled tails
//!   ([`correlation::rho_k_montecarlo`]), and
//! - closed forms on the full diagonal `k = n` for Gaussian, uniform and
//!   exponential coefficients.
//!
//! A formula-free oracle ([`oracle`]) samples actual polynomials, isolates
//! their real roots with certified sign-variation counts, and estimates the
//! same intensities empirically. The `rootcorr` binary exposes evaluation
//! grids, `P(all zeros real)` and the cross-verification suites; each major
//! capability also has a runnable example under `examples/`.

pub mod cli;
pub mod correlation;
pub mod error;
pub mod models;
pub mod oracle;
pub mod poly;
pub mod quad;
pub mod rng;

pub use error::{Error, Result};

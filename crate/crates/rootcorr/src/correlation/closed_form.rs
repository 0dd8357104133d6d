//! Closed forms of the diagonal correlation `ρ_n` for the three built-in
//! coefficient families.

use crate::error::{Error, Result};
use crate::poly::{elem_sym_all, PointConfig};

/// `Γ((n+1)/2)` by the half-integer recursion `Γ(z+1) = zΓ(z)` from
/// `Γ(1/2) = √π` and `Γ(1) = 1`.
pub fn gamma_half_int(n: usize) -> f64 {
    // (n+1)/2 = base + whole steps, base 1/2 for even n, 1 for odd n.
    let mut z;
    let mut g;
    if n.is_multiple_of(2) {
        z = 0.5;
        g = std::f64::consts::PI.sqrt();
    } else {
        z = 1.0;
        g = 1.0;
    }
    while z + 0.5 < (n + 1) as f64 / 2.0 {
        g *= z;
        z += 1.0;
    }
    g
}

/// `ρ_n` for independent Gaussian coefficients with standard deviations
/// `v_0, ..., v_n`:
///
/// `Γ((n+1)/2) / (π^{(n+1)/2} Πv_i) · (Σ_i σ_{n-i}^2/v_i^2)^{-(n+1)/2} · Π|x_i-x_j|`.
///
/// The prefactor comes from `∫|t|^n e^{-st²/2} dt = (2/s)^{(n+1)/2} Γ((n+1)/2)`
/// folded with the `(2π)^{-(n+1)/2}` normalization of the density product;
/// at `n = 1`, unit scales, it reproduces the standard Cauchy density of the
/// root `-ξ_0/ξ_1`.
pub fn rho_n_gaussian(x: &PointConfig, v: &[f64]) -> Result<f64> {
    let n = x.k();
    if v.len() != n + 1 {
        return Err(Error::LengthMismatch { expected: n + 1, got: v.len() });
    }
    let sigma = elem_sym_all(x);
    // σ_0 = 1 keeps the sum strictly positive.
    let s: f64 = (0..=n).map(|i| (sigma[n - i] / v[i]).powi(2)).sum();
    let v_prod: f64 = v.iter().product();
    let norm = gamma_half_int(n) / (std::f64::consts::PI.powf((n + 1) as f64 / 2.0) * v_prod);
    Ok(norm * s.powf(-((n + 1) as f64) / 2.0) * x.abs_vandermonde())
}

/// `ρ_n` for rate-1 exponential coefficients: supported on the negative
/// orthant, where it equals `n! Π|x_i-x_j| / Π(1-x_i)^{n+1}`.
pub fn rho_n_exponential(x: &PointConfig) -> f64 {
    let n = x.k();
    if x.points().iter().any(|&xi| xi >= 0.0) {
        return 0.0;
    }
    let fact: f64 = (1..=n).map(|i| i as f64).product();
    let denom: f64 = x.points().iter().map(|&xi| (1.0 - xi).powi(n as i32 + 1)).product();
    fact * x.abs_vandermonde() / denom
}

/// `ρ_n` for uniform-on-`[-1,1]` coefficients:
/// `(2^{-n}/(n+1)) Π|x_i-x_j| / (max_i |σ_i|)^{n+1}`.
pub fn rho_n_uniform(x: &PointConfig) -> f64 {
    let n = x.k();
    let max_sigma = elem_sym_all(x).iter().fold(0.0f64, |m, s| m.max(s.abs()));
    0.5f64.powi(n as i32) / (n + 1) as f64 * x.abs_vandermonde() / max_sigma.powi(n as i32 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn pc(pts: &[f64]) -> PointConfig {
        PointConfig::new(pts.to_vec()).unwrap()
    }

    #[test]
    fn gamma_values() {
        assert!((gamma_half_int(0) - PI.sqrt()).abs() < 1e-15);
        assert!((gamma_half_int(1) - 1.0).abs() < 1e-15);
        assert!((gamma_half_int(2) - 0.5 * PI.sqrt()).abs() < 1e-15);
        assert!((gamma_half_int(3) - 1.0).abs() < 1e-15);
        assert!((gamma_half_int(5) - 2.0).abs() < 1e-15);
        // Γ(13/2) = 10395/64 √π
        assert!((gamma_half_int(12) - 10395.0 / 64.0 * PI.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn gaussian_linear_is_cauchy() {
        // n = 1, unit scales: the root -ξ_0/ξ_1 is standard Cauchy.
        for xv in [0.0, 1.0, -0.7, 2.3] {
            let rho = rho_n_gaussian(&pc(&[xv]), &[1.0, 1.0]).unwrap();
            let cauchy = 1.0 / (PI * (1.0 + xv * xv));
            assert!((rho - cauchy).abs() < 1e-14 * cauchy, "x = {xv}");
        }
    }

    #[test]
    fn gaussian_scale_length_checked() {
        assert!(rho_n_gaussian(&pc(&[0.0]), &[1.0]).is_err());
    }

    #[test]
    fn exponential_values() {
        assert!((rho_n_exponential(&pc(&[-1.0])) - 0.25).abs() < 1e-15);
        assert_eq!(rho_n_exponential(&pc(&[0.5])), 0.0);
        // n = 2 at (-1, -2): 2·1/(2^3·3^3)
        let rho = rho_n_exponential(&pc(&[-1.0, -2.0]));
        assert!((rho - 2.0 / 216.0).abs() < 1e-15);
    }

    #[test]
    fn uniform_values() {
        assert!((rho_n_uniform(&pc(&[0.0])) - 0.25).abs() < 1e-15);
        assert!((rho_n_uniform(&pc(&[2.0])) - 0.0625).abs() < 1e-15);
    }

    #[test]
    fn symmetric_under_permutation() {
        let a = pc(&[-1.3, -0.4, -2.2]);
        let b = pc(&[-0.4, -2.2, -1.3]);
        assert!((rho_n_exponential(&a) - rho_n_exponential(&b)).abs() < 1e-15);
        assert!((rho_n_uniform(&a) - rho_n_uniform(&b)).abs() < 1e-16);
        let ga = rho_n_gaussian(&a, &[1.0; 4]).unwrap();
        let gb = rho_n_gaussian(&b, &[1.0; 4]).unwrap();
        assert!((ga - gb).abs() < 1e-15);
    }
}

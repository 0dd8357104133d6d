//! Deterministic quadrature route: `ρ_k` as an explicit integral over the
//! `n - k + 1` free tail parameters, and the probability that all zeros are
//! real as an outer integral of `ρ_n`.

use crate::models::CoefficientModel;
use crate::poly::{elem_sym_all, poly_eval, PointConfig};
use crate::quad::{integrate_box, Estimate, QuadratureSpec, Strategy, Transform};

use super::closed_form;

/// Integrand of the tail-parameter integral at `t = (t_0, ..., t_{n-k})`:
///
/// `Π_{i=0}^{n} f_i(Σ_j (-1)^{k-i+j} σ_{k-i+j}(x) t_j) · Π_{i=1}^{k} |Σ_j t_j x_i^j|`.
///
/// The Vandermonde prefactor `Π|x_i-x_j|` is applied by the caller.
pub fn rho_theorem2_integrand(model: &CoefficientModel, x: &PointConfig, t: &[f64]) -> f64 {
    let sigma = elem_sym_all(x);
    theorem2_integrand_with_sigma(model, x, &sigma, t)
}

fn theorem2_integrand_with_sigma(
    model: &CoefficientModel,
    x: &PointConfig,
    sigma: &[f64],
    t: &[f64],
) -> f64 {
    let k = x.k();
    let n = model.degree();
    debug_assert_eq!(t.len(), n - k + 1);

    let mut density = 1.0;
    for i in 0..=n {
        // a_i = Σ_j (-1)^{k-i+j} σ_{k-i+j} t_j, σ vanishing outside 0..=k.
        let mut a_i = 0.0;
        for (j, &tj) in t.iter().enumerate() {
            let idx = k as i64 - i as i64 + j as i64;
            if idx < 0 || idx > k as i64 {
                continue;
            }
            let s = if idx % 2 == 0 { 1.0 } else { -1.0 };
            a_i += s * sigma[idx as usize] * tj;
        }
        density *= model.density(i).expect("index in range").pdf(a_i);
        if density == 0.0 {
            return 0.0;
        }
    }

    let slope: f64 = x.points().iter().map(|&xi| poly_eval(t, xi).abs()).product();
    density * slope
}

/// Per-dimension bounds for the tail integral. The last variable always
/// inherits the support of the leading coefficient (`a_n = t_{n-k}`); when
/// every coefficient support is bounded, the remaining variables get the box
/// implied by back-substituting `|a_{k+r}| <= c_{k+r}` from the top row down.
///
/// For a one-dimensional tail (`k = n`) every coefficient is `±σ_{k-i} t`,
/// so the support of `t` is the exact intersection of the per-coefficient
/// constraints. That puts density discontinuities on the domain boundary,
/// where adaptive rules cannot step over them.
#[allow(clippy::needless_range_loop)] // index math mirrors the formulas
pub fn tail_bounds(model: &CoefficientModel, x: &PointConfig) -> Vec<(f64, f64)> {
    let k = x.k();
    let n = model.degree();
    let m = n - k + 1;
    let mut bounds = vec![(f64::NEG_INFINITY, f64::INFINITY); m];

    if m == 1 {
        let sigma = elem_sym_all(x);
        let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
        for i in 0..=n {
            let s = model.density(i).expect("index in range").support();
            let sign = if (k - i).is_multiple_of(2) { 1.0 } else { -1.0 };
            let c = sign * sigma[k - i];
            if c == 0.0 {
                continue; // a_i = 0; a zero-density origin zeroes the integral anyway
            }
            let (a, b) = if c > 0.0 { (s.lo / c, s.hi / c) } else { (s.hi / c, s.lo / c) };
            lo = lo.max(a);
            hi = hi.min(b);
        }
        if lo > hi {
            (lo, hi) = (0.0, 0.0);
        }
        bounds[0] = (lo, hi);
        return bounds;
    }

    let top = model.density(n).expect("leading index").support();
    bounds[m - 1] = (top.lo, top.hi);

    if model.all_supports_bounded() {
        let sigma = elem_sym_all(x);
        let caps: Vec<f64> = model
            .supports()
            .iter()
            .map(|s| s.lo.abs().max(s.hi.abs()))
            .collect();
        let mut mag = vec![0.0f64; m];
        for r in (0..m).rev() {
            // a_{k+r} = t_r ± Σ_{j>r} σ_{j-r} t_j within the support cap.
            let mut b = caps[k + r];
            for j in r + 1..m {
                let idx = j - r;
                if idx <= k {
                    b += sigma[idx].abs() * mag[j];
                }
            }
            mag[r] = b;
            bounds[r] = (-b, b);
        }
        bounds[m - 1] = (top.lo.max(-mag[m - 1]), top.hi.min(mag[m - 1]));
    }
    bounds
}

/// `ρ_k` by adaptive (or quasi-random) quadrature of the explicit integral.
///
/// Under `Strategy::Auto`, multidimensional tails of models with
/// non-smooth densities go to quasi-random integration: adaptive cubature
/// can step over the thin slabs cut out by support indicators and report a
/// confidently wrong answer, while equidistributed points cannot miss a set
/// of positive measure.
pub fn rho_k_quadrature(model: &CoefficientModel, x: &PointConfig, spec: &QuadratureSpec) -> Estimate {
    let sigma = elem_sym_all(x);
    let bounds = tail_bounds(model, x);
    let prefactor = x.abs_vandermonde();
    let m = bounds.len();
    let spec = if spec.strategy == Strategy::Auto && m >= 2 && !model.all_smooth() {
        (*spec).with_strategy(Strategy::QuasiRandom)
    } else {
        *spec
    };
    let est = integrate_box(
        |t| theorem2_integrand_with_sigma(model, x, &sigma, t),
        &bounds,
        &spec,
    );
    Estimate { value: prefactor * est.value, error: prefactor * est.error, ..est }
}

/// `P(all n zeros real) = (1/n!) ∫_{R^n} ρ_n(x) dx`.
///
/// `ρ_n` comes from the closed form when the model is a covered family and
/// from the one-dimensional tail integral otherwise. The outer integral runs
/// over the tangent compactification of `R^n`, adaptively for `n <= 2` and
/// quasi-randomly above; symmetry of the integrand is not exploited.
pub fn prob_all_real(
    model: &CoefficientModel,
    outer_spec: &QuadratureSpec,
    inner_spec: &QuadratureSpec,
) -> Estimate {
    let n = model.degree();
    if n == 1 {
        // One real root almost surely.
        return Estimate { value: 1.0, error: 0.0, evals: 0, converged: true };
    }
    let fact: f64 = (1..=n).map(|i| i as f64).product();

    let use_closed = model.gaussian_family().is_some()
        || model.is_uniform_family()
        || model.is_exponential_family();

    let rho_n = |pts: &[f64]| -> f64 {
        let x = match PointConfig::new(pts.to_vec()) {
            Ok(x) => x,
            // Inside the separation floor ρ_n is pinned to 0 by the
            // Vandermonde factor.
            Err(_) => return 0.0,
        };
        if use_closed {
            closed_form(model, &x).expect("family checked")
        } else {
            rho_k_quadrature(model, &x, inner_spec).value
        }
    };

    // Exponential coefficients force all real zeros negative.
    let bounds = if model.is_exponential_family() {
        vec![(f64::NEG_INFINITY, 0.0); n]
    } else {
        vec![(f64::NEG_INFINITY, f64::INFINITY); n]
    };
    let outer = QuadratureSpec {
        transform: Transform::Tangent,
        strategy: if n <= 2 { Strategy::AdaptiveTensor } else { Strategy::QuasiRandom },
        ..*outer_spec
    };
    let est = integrate_box(rho_n, &bounds, &outer);
    Estimate { value: est.value / fact, error: est.error / fact, ..est }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pc(pts: &[f64]) -> PointConfig {
        PointConfig::new(pts.to_vec()).unwrap()
    }

    #[test]
    fn integrand_zero_at_origin() {
        let m = CoefficientModel::gaussian(3, 1.0).unwrap();
        let x = pc(&[0.3, -0.8]);
        assert_eq!(rho_theorem2_integrand(&m, &x, &[0.0, 0.0]), 0.0);
    }

    #[test]
    fn uniform_integrand_vanishes_outside_box() {
        let m = CoefficientModel::uniform(2).unwrap();
        let x = pc(&[0.5]);
        // a_2 = t_1 out of [-1,1] kills the density product.
        assert_eq!(rho_theorem2_integrand(&m, &x, &[0.0, 1.5]), 0.0);
    }

    #[test]
    fn integrand_at_zero_point() {
        // n = 1, k = 1, x = 0: integrand is f_0(0) f_1(t0) |t0|.
        let m = CoefficientModel::gaussian(1, 1.0).unwrap();
        let x = pc(&[0.0]);
        let t0 = 0.7;
        let expect = m.pdf(0, 0.0).unwrap() * m.pdf(1, t0).unwrap() * t0;
        let got = rho_theorem2_integrand(&m, &x, &[t0]);
        assert!((got - expect).abs() < 1e-15);
    }

    #[test]
    fn gaussian_rho1_n1_is_cauchy() {
        let m = CoefficientModel::gaussian(1, 1.0).unwrap();
        let spec = QuadratureSpec::default();
        let r = rho_k_quadrature(&m, &pc(&[0.0]), &spec);
        assert!(r.converged);
        assert!((r.value - 1.0 / std::f64::consts::PI).abs() < 1e-8);
    }

    #[test]
    fn uniform_rho1_n1_quarter() {
        let m = CoefficientModel::uniform(1).unwrap();
        let spec = QuadratureSpec::default();
        let r = rho_k_quadrature(&m, &pc(&[0.0]), &spec);
        assert!((r.value - 0.25).abs() < 1e-7);
    }

    #[test]
    fn uniform_tail_bounds_are_finite() {
        let m = CoefficientModel::uniform(3).unwrap();
        let x = pc(&[0.5, -1.5]);
        let b = tail_bounds(&m, &x);
        assert_eq!(b.len(), 2);
        assert!(b.iter().all(|(lo, hi)| lo.is_finite() && hi.is_finite()));
        assert_eq!(b[1], (-1.0, 1.0));
    }

    #[test]
    fn exponential_tail_bound_clips_negative() {
        let m = CoefficientModel::exponential(2).unwrap();
        let x = pc(&[-0.5]);
        let b = tail_bounds(&m, &x);
        assert_eq!(b[1].0, 0.0);
        assert!(b[1].1.is_infinite());
    }

    #[test]
    fn prob_all_real_linear_is_one() {
        let m = CoefficientModel::gaussian(1, 1.0).unwrap();
        let spec = QuadratureSpec::default();
        let r = prob_all_real(&m, &spec, &spec);
        assert_eq!(r.value, 1.0);
    }

    #[test]
    fn exponential_rho_matches_closed_form_on_orthant() {
        let m = CoefficientModel::exponential(2).unwrap();
        let x = pc(&[-0.4, -1.2]);
        let spec = QuadratureSpec::default().with_rel_tol(1e-9);
        let r = rho_k_quadrature(&m, &x, &spec);
        let cf = crate::correlation::rho_n_exponential(&x);
        assert!((r.value - cf).abs() < 1e-6 * cf, "quad {} cf {}", r.value, cf);
    }
}

//! Structural invariants checked with property-based inputs, plus an
//! independent discriminant cross-check of the root isolator.

use proptest::prelude::*;

use rootcorr::correlation::rho_k_quadrature;
use rootcorr::models::CoefficientModel;
use rootcorr::oracle::real_roots;
use rootcorr::poly::{
    coeffs_from_factorization, eta_vandermonde, poly_mul, PointConfig, TailCoefficients,
};
use rootcorr::quad::QuadratureSpec;
use rootcorr::rng::stream_rng;

fn separated(pts: &[f64]) -> bool {
    pts.iter().enumerate().all(|(i, a)| pts[i + 1..].iter().all(|b| (a - b).abs() >= 0.05))
}

proptest! {
    #[test]
    fn eta_is_linear_in_the_tail(
        pts in prop::collection::vec(-2.0f64..2.0, 1..4),
        t1 in prop::collection::vec(-1.0f64..1.0, 4),
        t2 in prop::collection::vec(-1.0f64..1.0, 4),
        a in -2.0f64..2.0,
        b in -2.0f64..2.0,
    ) {
        prop_assume!(separated(&pts));
        let k = pts.len();
        let n = k + 3;
        let x = PointConfig::new(pts).unwrap();
        let mix: Vec<f64> = t1.iter().zip(&t2).map(|(u, v)| a * u + b * v).collect();
        let e1 = eta_vandermonde(&x, &TailCoefficients::new(t1).unwrap(), n).unwrap();
        let e2 = eta_vandermonde(&x, &TailCoefficients::new(t2).unwrap(), n).unwrap();
        let em = eta_vandermonde(&x, &TailCoefficients::new(mix).unwrap(), n).unwrap();
        for i in 0..k {
            let want = a * e1[i] + b * e2[i];
            prop_assert!((em[i] - want).abs() <= 1e-9 * (1.0 + want.abs()));
        }
    }

    #[test]
    fn factorization_matches_polynomial_product(
        pts in prop::collection::vec(-2.0f64..2.0, 1..5),
        b in prop::collection::vec(-1.0f64..1.0, 1..5),
    ) {
        prop_assume!(separated(&pts));
        let x = PointConfig::new(pts.clone()).unwrap();
        let low = coeffs_from_factorization(&x, &b).unwrap();
        let mut full = b.clone();
        for &xi in &pts {
            full = poly_mul(&full, &[-xi, 1.0]);
        }
        let scale = full.iter().fold(1e-30f64, |m, c| m.max(c.abs()));
        for (got, want) in low.iter().chain(b.iter()).zip(&full) {
            prop_assert!((got - want).abs() <= 1e-12 * scale);
        }
    }

    #[test]
    fn rho_is_symmetric_under_point_permutation(
        x0 in -2.0f64..2.0,
        x1 in -2.0f64..2.0,
    ) {
        prop_assume!((x0 - x1).abs() >= 0.1);
        let model = CoefficientModel::gaussian(3, 1.0).unwrap();
        let spec = QuadratureSpec::default().with_rel_tol(1e-8);
        let fwd = rho_k_quadrature(&model, &PointConfig::new(vec![x0, x1]).unwrap(), &spec);
        let rev = rho_k_quadrature(&model, &PointConfig::new(vec![x1, x0]).unwrap(), &spec);
        prop_assert!((fwd.value - rev.value).abs() <= 1e-9 * (1.0 + fwd.value.abs()));
    }
}

#[test]
fn quadratic_roots_match_discriminant() {
    use rand_distr::{Distribution, StandardNormal};
    let mut rng = stream_rng(77, 0);
    let mut mismatches = 0usize;
    let mut discarded = 0usize;
    let trials = 100_000;
    for _ in 0..trials {
        let c: Vec<f64> = (0..3).map(|_| StandardNormal.sample(&mut rng)).collect();
        let disc = c[1] * c[1] - 4.0 * c[0] * c[2];
        let want = if disc > 0.0 { 2 } else { 0 };
        // Skip the measure-zero neighborhood of a double root where the
        // discriminant itself is numerically ambiguous.
        if disc.abs() < 1e-9 {
            discarded += 1;
            continue;
        }
        match real_roots(&c) {
            Ok(rs) => {
                if rs.count() != want {
                    mismatches += 1;
                }
            }
            Err(_) => discarded += 1,
        }
    }
    assert_eq!(mismatches, 0, "root counter disagrees with the discriminant");
    assert!((discarded as f64) < 1e-3 * trials as f64, "discarded {discarded}");
}

#[test]
fn real_root_count_has_degree_parity() {
    use rand_distr::{Distribution, StandardNormal};
    let mut rng = stream_rng(78, 0);
    for n in 1..=6usize {
        for _ in 0..2_000 {
            let c: Vec<f64> = (0..=n).map(|_| StandardNormal.sample(&mut rng)).collect();
            if let Ok(rs) = real_roots(&c) {
                // Complex roots come in conjugate pairs.
                assert_eq!(rs.count() % 2, n % 2, "coeffs {c:?}");
            }
        }
    }
}

#[test]
fn roots_evaluate_to_near_zero() {
    use rand_distr::{Distribution, StandardNormal};
    let mut rng = stream_rng(79, 0);
    for _ in 0..5_000 {
        let c: Vec<f64> = (0..=5).map(|_| StandardNormal.sample(&mut rng)).collect();
        if let Ok(rs) = real_roots(&c) {
            let scale = c.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            for &r in rs.roots() {
                let val = rootcorr::poly::poly_eval(&c, r).abs();
                assert!(val <= 1e-8 * scale * (1.0 + r.abs()).powi(5), "residual {val} at {r}");
            }
        }
    }
}

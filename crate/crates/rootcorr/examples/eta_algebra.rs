//! The eta map sends the free tail coefficients to the low-order
//! coefficients that force zeros at prescribed points. It has two
//! independent evaluations (a Vandermonde solve and a signed Schur
//! expansion) and a closed-form Jacobian determinant; this example shows
//! all three agreeing on a random instance.
//!
//!     cargo run --release --example eta_algebra

use rand_distr::{Distribution, StandardNormal};
use rootcorr::poly::{
    eta_jacobian_det, eta_schur, eta_vandermonde, poly_eval, PointConfig, TailCoefficients,
};
use rootcorr::rng::stream_rng;

fn main() {
    let n = 7;
    let x = PointConfig::new(vec![-1.3, -0.2, 0.8, 1.6]).unwrap();
    let k = x.k();
    let mut rng = stream_rng(2024, 0);
    let tail =
        TailCoefficients::new((0..=n - k).map(|_| StandardNormal.sample(&mut rng)).collect())
            .unwrap();

    let via_solve = eta_vandermonde(&x, &tail, n).unwrap();
    let via_schur = eta_schur(&x, &tail, n).unwrap();
    println!("eta by Vandermonde solve : {via_solve:?}");
    println!("eta by Schur expansion   : {via_schur:?}");

    // The polynomial with coefficients (eta, tail) vanishes at every x_i.
    let mut coeffs = via_solve.clone();
    coeffs.extend_from_slice(tail.values());
    for &xi in x.points() {
        println!("G({xi:>5.2}) = {:+.3e}", poly_eval(&coeffs, xi));
    }

    let det = eta_jacobian_det(&x, &tail, n).unwrap();
    println!("det d(eta)/d(x) = {det:.10}");
}

//! Certified real-root isolation: Sturm sign-variation counts bracket each
//! root, bisection plus a Newton polish refines it, and a residual
//! certificate accepts or rejects the result.
//!
//!     cargo run --release --example root_isolation

use rand_distr::{Distribution, StandardNormal};
use rootcorr::oracle::real_roots;
use rootcorr::poly::poly_eval;
use rootcorr::rng::stream_rng;

fn main() {
    // Wilkinson-flavored fixed case: roots at 1, 2, 3.
    let cubic = [-6.0, 11.0, -6.0, 1.0];
    let rs = real_roots(&cubic).unwrap();
    println!("x^3 - 6x^2 + 11x - 6: roots {:?}", rs.roots());

    // Random degree-8 polynomials with standard normal coefficients.
    let mut rng = stream_rng(7, 0);
    for trial in 0..5 {
        let coeffs: Vec<f64> = (0..=8).map(|_| StandardNormal.sample(&mut rng)).collect();
        match real_roots(&coeffs) {
            Ok(rs) => {
                let max_resid = rs
                    .roots()
                    .iter()
                    .map(|&r| poly_eval(&coeffs, r).abs())
                    .fold(0.0f64, f64::max);
                println!(
                    "trial {trial}: {} real roots, max |G(root)| = {max_resid:.2e}",
                    rs.count()
                );
            }
            Err(e) => println!("trial {trial}: certification refused ({e})"),
        }
    }
}

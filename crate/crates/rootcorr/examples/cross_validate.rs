//! Evaluate a two-point correlation by both independent routes: the
//! deterministic tail integral and the Monte Carlo expectation over sampled
//! tails, and compare against the closed form on the full diagonal k = n.
//!
//!     cargo run --release --example cross_validate

use rootcorr::correlation::{closed_form, rho_k_montecarlo, rho_k_quadrature, MonteCarloSpec};
use rootcorr::models::CoefficientModel;
use rootcorr::poly::PointConfig;
use rootcorr::quad::QuadratureSpec;

fn main() {
    let model = CoefficientModel::gaussian(3, 1.0).unwrap();
    let x = PointConfig::new(vec![-0.4, 0.9]).unwrap();

    let quad = rho_k_quadrature(&model, &x, &QuadratureSpec::default().with_rel_tol(1e-8));
    let mc_spec = MonteCarloSpec { samples: 2_000_000, seed: 1, batch: 65_536 };
    let mc = rho_k_montecarlo(&model, &x, &mc_spec).unwrap();

    println!("rho_2(-0.4, 0.9), degree 3, standard Gaussian coefficients");
    println!("  tail quadrature : {:.10} +- {:.1e} ({} evals)", quad.value, quad.error, quad.evals);
    println!("  Monte Carlo     : {:.10} +- {:.1e}", mc.estimate.value, mc.estimate.error);
    let diff = (quad.value - mc.estimate.value).abs();
    println!("  |difference|    : {:.2e} ({:.2} sigma)", diff, diff / (quad.error + mc.estimate.error));

    // On the diagonal k = n there is also an exact closed form.
    let model2 = CoefficientModel::gaussian(2, 1.0).unwrap();
    let x2 = PointConfig::new(vec![-0.4, 0.9]).unwrap();
    let exact = closed_form(&model2, &x2).unwrap();
    let quad2 = rho_k_quadrature(&model2, &x2, &QuadratureSpec::default().with_rel_tol(1e-10));
    println!("\nrho_2(-0.4, 0.9), degree 2 (diagonal k = n)");
    println!("  closed form     : {exact:.12}");
    println!("  tail quadrature : {:.12} (rel dev {:.1e})", quad2.value, (quad2.value - exact).abs() / exact);
}

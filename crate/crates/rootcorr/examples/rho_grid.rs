//! Evaluate the one-point correlation function (zero intensity) of a
//! degree-3 random polynomial on a grid, for all three built-in models.
//!
//!     cargo run --release --example rho_grid

use rootcorr::correlation::rho_k_quadrature;
use rootcorr::models::CoefficientModel;
use rootcorr::poly::PointConfig;
use rootcorr::quad::QuadratureSpec;

fn main() {
    let n = 3;
    let models = [
        ("gaussian", CoefficientModel::gaussian(n, 1.0).unwrap()),
        ("uniform", CoefficientModel::uniform(n).unwrap()),
        ("exponential", CoefficientModel::exponential(n).unwrap()),
    ];
    let spec = QuadratureSpec::default().with_rel_tol(1e-5);

    println!("{:>8} {:>14} {:>14} {:>14}", "x", "gaussian", "uniform", "exponential");
    for i in 0..=20 {
        let x = -2.0 + 0.2 * i as f64;
        print!("{x:>8.2}");
        for (_, model) in &models {
            let pc = PointConfig::new(vec![x]).unwrap();
            let est = rho_k_quadrature(model, &pc, &spec);
            print!(" {:>14.8}", est.value);
        }
        println!();
    }
}

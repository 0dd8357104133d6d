//! Empirical intensity of real zeros (mean root count per bin) next to the
//! bin-integrated one-point correlation function.
//!
//!     cargo run --release --example intensity_profile

use rootcorr::correlation::{rho_k_quadrature, MonteCarloSpec};
use rootcorr::models::CoefficientModel;
use rootcorr::oracle::{empirical_intensity, BoxFamily};
use rootcorr::poly::PointConfig;
use rootcorr::quad::QuadratureSpec;

fn main() {
    let model = CoefficientModel::gaussian(4, 1.0).unwrap();
    let bins = BoxFamily::grid(-2.0, 2.0, 16).unwrap();
    let mc = MonteCarloSpec { samples: 200_000, seed: 5, batch: 16_384 };
    let prof = empirical_intensity(&model, &bins, &mc);

    let spec = QuadratureSpec::default().with_rel_tol(1e-5);
    println!("{:>16} {:>12} {:>10} {:>12}", "bin", "sampled", "stderr", "midpoint rho_1*w");
    for (&(lo, hi), est) in bins.boxes().iter().zip(&prof.estimates) {
        let mid = 0.5 * (lo + hi);
        let rho = rho_k_quadrature(&model, &PointConfig::new(vec![mid]).unwrap(), &spec);
        println!(
            "[{lo:>6.2}, {hi:>5.2}) {:>12.6} {:>10.1e} {:>12.6}",
            est.value,
            est.error,
            rho.value * (hi - lo)
        );
    }
    println!("certification discard rate: {:.2e}", prof.discard_rate);
}

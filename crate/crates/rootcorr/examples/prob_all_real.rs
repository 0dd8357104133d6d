//! Probability that all zeros of the degree-n random polynomial are real,
//! by integrating the diagonal correlation function, checked against direct
//! sampling with certified root counting.
//!
//!     cargo run --release --example prob_all_real

use rootcorr::correlation::{prob_all_real, MonteCarloSpec};
use rootcorr::models::CoefficientModel;
use rootcorr::oracle::empirical_prob_all_real;
use rootcorr::quad::QuadratureSpec;

fn main() {
    let spec = QuadratureSpec::default().with_rel_tol(1e-6);
    let mc = MonteCarloSpec { samples: 1_000_000, seed: 42, batch: 65_536 };

    println!("{:>12} {:>4} {:>12} {:>20}", "model", "n", "integral", "sampled (1e6 draws)");
    for n in [2usize, 3] {
        for (name, model) in [
            ("gaussian", CoefficientModel::gaussian(n, 1.0).unwrap()),
            ("uniform", CoefficientModel::uniform(n).unwrap()),
            ("exponential", CoefficientModel::exponential(n).unwrap()),
        ] {
            let p = prob_all_real(&model, &spec, &spec);
            let emp = empirical_prob_all_real(&model, &mc);
            let e = &emp.estimates[0];
            println!(
                "{name:>12} {n:>4} {:>12.6} {:>14.6} +- {:.1e}",
                p.value, e.value, e.error
            );
        }
    }
}

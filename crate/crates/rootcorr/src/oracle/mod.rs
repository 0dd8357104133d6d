//! Formula-free ground truth: sample actual random polynomials, isolate
//! their real roots with certified counts, and estimate intensities,
//! correlations and `P(all zeros real)` empirically.

mod empirical;
mod roots;

pub use empirical::{
    empirical_correlation, empirical_intensity, empirical_prob_all_real, BoxFamily,
    EmpiricalProfile,
};
pub use roots::{real_roots, RootSet};

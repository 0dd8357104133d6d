use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Two evaluation points are closer than the separation floor.
    #[error("points {0} and {1} violate the separation floor (min distance {2:.3e})")]
    SeparationViolation(f64, f64, f64),

    #[error("non-finite evaluation point {0}")]
    NonFinitePoint(f64),

    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("coefficient index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("partition is not weakly decreasing at position {0}")]
    InvalidPartition(usize),

    #[error("partition length {len} exceeds point count {k}")]
    PartitionTooLong { len: usize, k: usize },

    #[error("zero polynomial has no well-defined root set")]
    ZeroPolynomial,

    #[error("root certification failed: {0}")]
    CertificationFailure(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;

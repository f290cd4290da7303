use thiserror::Error;

/// Errors produced by the squeezing library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unsupported mode count {n}: at least {min} modes are required")]
    UnsupportedModeCount { n: usize, min: usize },

    #[error("parameter {name} = {value} is out of range ({bound})")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        bound: String,
    },

    #[error("numeric failure: {0}")]
    NumericFailure(String),

    #[error("shape mismatch: expected {expected}, got {got}")]
    Shape { expected: usize, got: usize },

    #[error("resource limit: dimension {dim} exceeds the limit of {limit}")]
    ResourceLimit { dim: usize, limit: usize },

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("truncation: displaced mass {mass:.3e} beyond cutoff exceeds {limit:.1e}")]
    Truncation { mass: f64, limit: f64 },

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

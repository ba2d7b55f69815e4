use thiserror::Error;

/// Failures raised by the numerical pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("root solver did not converge after {iterations} iterations (bracket [{lo}, {hi}], residual {residual:e})")]
    NonConvergence {
        iterations: usize,
        lo: f64,
        hi: f64,
        residual: f64,
    },

    #[error("no sign change found while bracketing: {0}")]
    NoBracket(String),

    #[error("approximation out of range: {0}")]
    OutOfRange(String),

    #[error("quadrature did not converge: estimated error {estimate:e} exceeds {tolerance:e}")]
    Quadrature { estimate: f64, tolerance: f64 },

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),
}

pub type Result<T> = std::result::Result<T, Error>;

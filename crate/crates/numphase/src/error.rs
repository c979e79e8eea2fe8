//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Matrix or vector shapes are incompatible for the requested operation.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// An input failed a structural invariant (Hermiticity, positivity,
    /// normalization, orthonormality, unitarity, completeness, ...).
    #[error("invalid input: {0}")]
    Validation(String),

    /// A scalar parameter is outside the domain of the operation.
    #[error("domain violation: {0}")]
    Domain(String),

    /// A truncation dimension is too small for the requested tail tolerance.
    #[error("insufficient dimension: {0}")]
    InsufficientDim(String),

    /// Measurement probabilities drifted from unit sum beyond tolerance.
    #[error("probability drift {drift:e} exceeds tolerance {tolerance:e}")]
    ProbabilityDrift { drift: f64, tolerance: f64 },

    /// A quadrature grid does not resolve a requested bin.
    #[error("under-resolved bin: {0}")]
    UnderResolvedBin(String),

    /// Configuration file errors, with enough context to locate the field.
    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::ShapeMismatch(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}

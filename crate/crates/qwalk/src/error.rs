//! Error type shared by all modules.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated a precondition.
    #[error("validation error: {0}")]
    Validation(String),

    /// The state has already consumed its preallocated horizon.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// A mathematically well-posed input outside the function's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested quantity diverges at this input.
    #[error("divergence: {0}")]
    Divergence(String),

    /// Numerical state violated an internal invariant beyond tolerance.
    #[error("internal consistency error: {0}")]
    Internal(String),

    /// Malformed command line or configuration input.
    #[error("usage error: {0}")]
    Usage(String),

    /// Failure inside one ensemble trial.
    #[error("trial {index}: {source}")]
    Trial {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

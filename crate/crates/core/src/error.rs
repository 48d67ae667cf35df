//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Unsupported type, rank or parabolic requested.
    #[error("configuration error: {0}")]
    Config(String),

    /// Input violates a documented precondition (e.g. non-dominant point).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal mathematical invariant failed. This is a bug or a defect
    /// in embedded data, never a user error.
    #[error("invariant violation: {0}")]
    Invariant(String),

    /// Internal failure (e.g. LP found the chamber itself infeasible).
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

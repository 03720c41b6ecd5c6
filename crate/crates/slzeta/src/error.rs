//! Error types shared across the crate.

use thiserror::Error;

/// Errors surfaced by the library.
///
/// `InternalConsistency` marks a failed cross-check between two independent
/// constructions of the same quantity; it firing means a bug, not bad input.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two routes that must agree produced different values.
    #[error("internal consistency error: {0}")]
    InternalConsistency(String),

    /// An enumeration was refused because it exceeds the allowed budget.
    #[error("enumeration of {required} matrices exceeds budget {budget}")]
    Budget { required: u128, budget: u128 },

    /// A case the artifact deliberately does not handle.
    #[error("unsupported case: {0}")]
    Unsupported(String),

    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::InternalConsistency(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("insufficient truncation: need order {needed}, series has order {available}")]
    InsufficientTruncation { needed: usize, available: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("excluded pair (m={m}, n={n}): λ·m·n − m − n + 1 vanishes")]
    ExcludedPair { m: usize, n: usize },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

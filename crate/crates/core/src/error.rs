use thiserror::Error;

/// Errors raised by the library. Each variant maps onto one CLI exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The caller combined otherwise valid inputs in an invalid way.
    #[error("usage error: {0}")]
    Usage(String),
    /// The requested combination is not covered by any implemented result.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// The computation would exceed a table or enumeration bound.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// A constructed object disagreed with a claimed property.
    #[error("verification mismatch: {0}")]
    Verification(String),
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit code: 2 bad parameters, 3 capacity, 4 verification mismatch.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Usage(_) | Error::Unsupported(_) | Error::Parse(_) => 2,
            Error::Capacity(_) => 3,
            Error::Verification(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors surfaced by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("non-finite value: {0}")]
    NonFinite(String),
    #[error("parameter out of domain: {0}")]
    Domain(String),
    #[error("cannot parse {input:?} as {what}")]
    Parse { input: String, what: &'static str },
    #[error("series operation requires {0}")]
    Series(&'static str),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

use thiserror::Error;

/// Errors raised by the exact computations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the domain of an operation.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Operation defined only for some root-system types.
    #[error("unsupported operation: {0}")]
    Unsupported(String),

    /// An exact identity that must hold did not, e.g. a quotient that
    /// should be integral left a remainder.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    /// Input is degenerate (rank-deficient subspace, zero Pluecker vector).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A bounded search finished without finding a witness.
    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    #[error("integer overflow: {0}")]
    Overflow(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}

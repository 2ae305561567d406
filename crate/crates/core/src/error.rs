use thiserror::Error;

/// Errors raised by the library. Verdicts (holds / fails) are data, never errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    /// A desk-scale guardrail was hit. `hint` names the override.
    #[error("{what}: {requested} exceeds the cap of {limit} ({hint})")]
    CapExceeded {
        what: &'static str,
        requested: u128,
        limit: u128,
        hint: &'static str,
    },

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    /// A mathematical invariant that the library relies on was observed to fail.
    #[error("internal invariant failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn dim_err(msg: impl Into<String>) -> Error {
    Error::Dimension(msg.into())
}

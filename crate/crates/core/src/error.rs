use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),
    #[error("invalid unit: {0}")]
    InvalidUnit(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("algebra is not perfect: {0}")]
    NotPerfect(String),
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unknown sequent label `{0}`")]
    NotFound(String),
    #[error("carrier has {size} elements, above the cap of {cap}")]
    CarrierTooLarge { size: u128, cap: usize },
    #[error("decomposition failed at factor {factor}: {detail}")]
    DecompositionFailure { factor: usize, detail: String },
    #[error("axiom families disagree: {0}")]
    FamilyDisagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn mismatch(what: impl std::fmt::Display) -> Error {
    Error::CarrierMismatch(what.to_string())
}

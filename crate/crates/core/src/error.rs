use thiserror::Error;

/// Errors raised by the library. All of them are domain errors: the
/// arithmetic itself never fails once its preconditions hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("nonpositive Beta argument")]
    NonpositiveBeta,
    #[error("invalid rational `{0}`")]
    ParseRational(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unknown identity id `{0}`")]
    UnknownId(String),
    #[error("identity `{0}` has no oracle mapping")]
    NoOracle(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

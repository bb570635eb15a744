use thiserror::Error;

/// Errors raised by the optimizers, problems and statistics routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("problem `{problem}` produced a non-finite value ({value}) during evaluation")]
    Evaluation { problem: String, value: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid_argument(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

use thiserror::Error;

/// Errors raised by the library.
///
/// `Argument` covers malformed inputs (lengths, ranges, unknown names) and is
/// what the command line maps to a configuration failure. The remaining
/// variants signal that an operation was asked to work on data that breaks
/// one of its mathematical preconditions.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

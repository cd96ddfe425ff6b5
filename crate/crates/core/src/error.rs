use std::fmt;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Caller passed inconsistent or out-of-contract arguments.
    Input(String),
    /// A file or spec string could not be parsed; carries the 1-based line.
    Parse { line: usize, msg: String },
    /// An enumeration would exceed the configured operation budget.
    Budget(String),
    /// An internal cross-check failed; indicates a bug, not a user error.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Input(msg) => write!(f, "input error: {msg}"),
            Error::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
            Error::Budget(msg) => write!(f, "budget exceeded: {msg}"),
            Error::Internal(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

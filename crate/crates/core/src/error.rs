use thiserror::Error;

/// Failure taxonomy used across the crate.
///
/// `Invalid` marks inputs that could never work (bad shapes, out-of-range
/// indices, malformed files). `Degenerate` marks inputs that are well formed
/// but numerically hopeless (singular designs, collapsed variances), which
/// callers often want to contain rather than abort on. `Io` wraps anything
/// the filesystem or the CSV layer reports.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Degenerate(String),
    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

pub(crate) fn degenerate(msg: impl Into<String>) -> Error {
    Error::Degenerate(msg.into())
}

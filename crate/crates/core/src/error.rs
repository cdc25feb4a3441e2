use thiserror::Error;

/// Errors raised by the dual quantization library.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter or argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The distribution does not expose the functional the operation needs.
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    /// A documented precondition on the inputs does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A grid is not strictly increasing or does not match the support.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    /// A root could not be bracketed or an iteration broke down.
    #[error("numerical failure: {0}")]
    Numerical(String),
    /// A textual distribution description could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

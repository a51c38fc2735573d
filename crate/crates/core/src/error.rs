use std::fmt;

/// Error type shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument left the mathematical domain of an operation
    /// (negative gamma argument, kernel evaluated at or past its
    /// singularity, and so on).
    Domain(String),
    /// A structurally invalid parameter set (zero rate product,
    /// zero control gain, order outside (0, 1], ...).
    Parameter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Parameter(msg) => write!(f, "parameter error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

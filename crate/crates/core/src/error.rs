use thiserror::Error;

/// Errors raised across the toolkit.
///
/// Each variant maps onto one CLI exit code (see [`Error::exit_code`]).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed arguments: out-of-range vertex, empty set, bad family parameters.
    #[error("input error: {0}")]
    Input(String),
    /// The request is well-formed but mathematically undefined (e.g. diameter of a
    /// disconnected graph).
    #[error("domain error: {0}")]
    Domain(String),
    /// A theorem hypothesis required by a construction does not hold.
    #[error("hypothesis error: {0}")]
    Hypothesis(String),
    /// A construction was asked for an unsupported combination of modes.
    #[error("mode error: {0}")]
    Mode(String),
    /// Exact search refused because the instance exceeds the configured guard.
    #[error("capacity error: {what} needs n <= {limit}, got {actual}; use a heuristic or raise the limit")]
    Capacity {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    /// Edge-list or report document could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// Random generator gave up.
    #[error("generation error: {0}")]
    Generation(String),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Hypothesis(_) | Error::Mode(_) | Error::Generation(_) => 1,
            Error::Input(_) | Error::Parse { .. } => 2,
            Error::Capacity { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

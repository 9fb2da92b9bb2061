use thiserror::Error;

/// Crate-wide error type. The three computational variants map onto the
/// CLI exit codes: parameter errors exit 2, domain errors exit 3, numeric
/// errors exit 4.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid argument before any computation starts (bad p/q, unknown
    /// crossing id, malformed braid word, ...).
    #[error("parameter error: {0}")]
    Parameter(String),

    /// The input is structurally valid but the operation is not defined on
    /// it (disconnected graph, split diagram, non-alternating input to an
    /// alternating-only identity, out-of-range bound formula, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A numerical routine failed or lost the accuracy it promises
    /// (singular reduced Laplacian, barrier breakdown, ...).
    #[error("numeric error: {0}")]
    Numeric(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }

    /// Process exit code for the CLI: 0 success, 2 usage/parameter
    /// (including unreadable or malformed input files), 3 domain,
    /// 4 numeric.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parameter(_) | Error::Io(_) | Error::Json(_) => 2,
            Error::Domain(_) => 3,
            Error::Numeric(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// Variants are grouped by [`ErrorCategory`] so the command-line front end can
/// map them to stable exit codes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("inhomogeneous input: {0}")]
    Inhomogeneous(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("not liftable: {0}")]
    NotLiftable(String),
    #[error("final homotopy identity fails: {0}")]
    FinalIdentityFails(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("i/o error: {0}")]
    Io(String),
}

/// Coarse classification used for exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    /// Malformed input or arguments.
    Input,
    /// The mathematical hypotheses of a construction do not hold.
    Hypothesis,
    /// A lifting step or internal identity failed.
    Internal,
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::Parse(_)
            | Error::InvalidRing(_)
            | Error::RingMismatch(_)
            | Error::Shape(_)
            | Error::Inhomogeneous(_)
            | Error::InvalidArgument(_)
            | Error::Io(_) => ErrorCategory::Input,
            Error::HypothesisFailed(_) => ErrorCategory::Hypothesis,
            Error::NotLiftable(_) | Error::FinalIdentityFails(_) | Error::Verification(_) => {
                ErrorCategory::Internal
            }
        }
    }

    /// Short machine-readable tag, printed by the CLI on failure.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::InvalidRing(_) => "invalid-ring",
            Error::RingMismatch(_) => "ring-mismatch",
            Error::Shape(_) => "shape",
            Error::Inhomogeneous(_) => "inhomogeneous",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::HypothesisFailed(_) => "hypothesis-failed",
            Error::NotLiftable(_) => "not-liftable",
            Error::FinalIdentityFails(_) => "final-identity-fails",
            Error::Verification(_) => "verification",
            Error::Io(_) => "io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

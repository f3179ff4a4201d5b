use thiserror::Error;

/// Errors raised by the library.
///
/// The variants are grouped by who is at fault: the caller (`DegreeMismatch`,
/// `Input`, `Precondition`), the size of the problem (`Capacity`), or the
/// engine itself (`Invariant`, `TheoremViolation`).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("capacity exceeded: {what} (cap {cap})")]
    Capacity { what: String, cap: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn capacity(what: impl Into<String>, cap: usize) -> Self {
        Error::Capacity {
            what: what.into(),
            cap,
        }
    }

    /// Short machine-readable code for the error class.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DegreeMismatch { .. } => "degree_mismatch",
            Error::Input(_) => "input",
            Error::Precondition(_) => "precondition",
            Error::Capacity { .. } => "capacity",
            Error::Invariant(_) => "invariant",
            Error::TheoremViolation(_) => "theorem_violation",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

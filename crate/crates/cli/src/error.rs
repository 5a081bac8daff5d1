use thiserror::Error;

/// A failed command, classified by the exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    /// Malformed or inconsistent input data (exit code 1).
    #[error("{0}")]
    Invalid(String),
    /// Well-formed input violating an operation's precondition (exit code 2).
    #[error("{0}")]
    Precondition(String),
    /// An internal invariant failed (exit code 3).
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Precondition(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    pub fn category(&self) -> &'static str {
        match self {
            CliError::Invalid(_) => "invalid input",
            CliError::Precondition(_) => "precondition violated",
            CliError::Internal(_) => "internal failure",
        }
    }

    /// Prefixes the message with a location or context.
    pub fn context(self, what: impl std::fmt::Display) -> Self {
        match self {
            CliError::Invalid(m) => CliError::Invalid(format!("{what}: {m}")),
            CliError::Precondition(m) => CliError::Precondition(format!("{what}: {m}")),
            CliError::Internal(m) => CliError::Internal(format!("{what}: {m}")),
        }
    }
}

impl From<pgsym_core::Error> for CliError {
    fn from(e: pgsym_core::Error) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else if e.is_precondition() {
            CliError::Precondition(e.to_string())
        } else {
            CliError::Invalid(e.to_string())
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

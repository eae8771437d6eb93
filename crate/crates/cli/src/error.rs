use thiserror::Error;

/// Exit code for a passing check or a successful construction.
pub const EXIT_PASS: i32 = 0;
/// Exit code for a failing check; the report carries the witness.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for a vacuous law or a violated library precondition.
pub const EXIT_PRECONDITION: i32 = 2;
/// Exit code for usage, IO and parse errors.
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Library(#[from] markov_core::Error),
}

impl CliError {
    /// Validation failures while loading a file count as parse errors.
    pub fn from_load(e: markov_core::Error) -> Self {
        CliError::Parse(e.to_string())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(_) => EXIT_PRECONDITION,
            _ => EXIT_USAGE,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io",
            CliError::Parse(_) => "parse",
            CliError::Library(_) => "precondition",
        }
    }
}

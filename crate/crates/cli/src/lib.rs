//! Library side of the `skewsep` command: problem files, reports and the
//! command implementations. The binary only parses arguments and prints.

pub mod commands;
pub mod problem;
pub mod report;

pub use problem::{Int, Problem, ProblemFile};

/// Failures that end a command, each with a fixed exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unreadable or malformed input, or a ring that fails validation.
    #[error("{0}")]
    Parse(String),
    /// `f` is not in `R(0)` or has coefficients outside `B^ρ`.
    #[error("{0}")]
    Scope(String),
    /// A checked identity failed inside the library.
    #[error("{0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Scope(_) => 3,
            CliError::Invariant(_) => 4,
        }
    }
}

impl From<skewsep::Error> for CliError {
    fn from(e: skewsep::Error) -> Self {
        use skewsep::Error as E;
        match e {
            E::Dimension(_) | E::Usage(_) | E::InvalidRing(_) => CliError::Parse(e.to_string()),
            E::NotInR0(_) | E::OutOfScope(_) => CliError::Scope(e.to_string()),
            E::Invariant(_) => CliError::Invariant(e.to_string()),
        }
    }
}

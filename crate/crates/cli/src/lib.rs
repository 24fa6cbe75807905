//! File formats, analysis reports and error plumbing behind the `pbent`
//! binary.

pub mod formats;
pub mod report;

use formats::FormatError;
use pbent_core::Error as CoreError;

/// Exit codes of the binary.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 2;
    pub const PARSE: i32 = 3;
    pub const PRECONDITION: i32 = 4;
    pub const INCONSISTENCY: i32 = 5;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Io { .. } => exit::PARSE,
            CliError::Precondition(_) => exit::PRECONDITION,
            CliError::Format(FormatError::Core(e)) | CliError::Core(e) => core_exit_code(e),
            CliError::Format(_) => exit::PARSE,
        }
    }
}

fn core_exit_code(e: &CoreError) -> i32 {
    use CoreError::*;
    match e {
        NonzeroAtOrigin(_)
        | NotEven { .. }
        | OddDimension(_)
        | NotBent { .. }
        | NotFeasible
        | NotAScheme
        | FusionRefused(_) => exit::PRECONDITION,
        Inconsistency(_) => exit::INCONSISTENCY,
        NotPrime(_)
        | EvenPrime(_)
        | IndexOutOfRange { .. }
        | LengthMismatch { .. }
        | ModulusMismatch { .. }
        | SpaceTooLarge { .. }
        | InvalidTable(_)
        | Parse { .. }
        | InvalidPartition(_)
        | InvalidArray(_)
        | ClassOutOfRange { .. } => exit::PARSE,
    }
}

//! Command-line front end, file formats and the parallel search driver for
//! `pellrec-core`.

pub mod cli;
pub mod io;
pub mod parallel;

pub use pellrec_core as core;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] pellrec_core::Error),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}: {1}")]
    File(String, std::io::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 1 for bad input, 2 for a failed verification, 3 for a tripped
    /// resource guard, 64 for usage errors.
    pub fn exit_code(&self) -> i32 {
        use pellrec_core::Error as E;
        match self {
            CliError::Core(E::Verification(_)) => 2,
            CliError::Core(E::Resource(_)) => 3,
            CliError::Usage(_) => cli::EXIT_USAGE,
            _ => 1,
        }
    }
}

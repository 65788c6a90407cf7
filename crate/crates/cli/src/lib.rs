//! Command-line front end. Every command produces a [`RunReport`].

pub mod args;
mod commands;
pub mod report;
pub mod verify;

use std::time::Instant;

use args::{Cli, Command};
use brunnian_core::Error;
pub use report::{Check, RunReport};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad input: exit code 2.
    #[error("{0}")]
    Usage(String),
    /// The computation itself failed: exit code 1.
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownSymbol(_)
            | Error::DuplicateSymbol(_)
            | Error::AlphabetMismatch
            | Error::InvalidParameter(..)
            | Error::Parse { .. }
            | Error::ParseLine { .. }
            | Error::StrandOutOfRange { .. }
            | Error::StrandMismatch(..)
            | Error::UnknownPresentation(_)
            | Error::NotPure
            | Error::NotBrunnian => CliError::Usage(e.to_string()),
            Error::NotAMember | Error::NotClosed(_) | Error::Verification(_) => CliError::Failure(e.to_string()),
        }
    }
}

pub fn run(cli: &Cli) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Verify { only, seed } => verify::run(only, *seed),
        Command::Order(g) => commands::order(g)?,
        Command::Profile(g) => commands::profile(g)?,
        Command::Closure { group, gens } => commands::closure(group, gens)?,
        Command::Brunnian { group, word } => commands::brunnian(group, word)?,
        Command::Basis { which } => commands::basis(which)?,
        Command::Enumerate { which } => commands::enumerate(which)?,
        Command::Hopf { strands, n, order, word } => commands::hopf(*strands, *n, order, word)?,
        Command::NormalForm { group, word } => commands::normal_form_cmd(group, word)?,
    };
    report.wall_time_ms = start.elapsed().as_secs_f64() * 1000.0;
    Ok(report)
}

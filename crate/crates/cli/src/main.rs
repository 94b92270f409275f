//! `squarint`: list, verify and evaluate unit-cube and half-line integral
//! identities.
//!
//! Exit codes: 0 when every selected asserted identity passes, 1 when some
//! identity fails or an ad-hoc evaluation errors, 2 for usage and parse
//! errors (including unknown ids), 3 for I/O errors.

mod args;
mod commands;
mod format;

use std::process::ExitCode;

use clap::Parser;

/// Failure of a command, mapped onto the exit-code contract.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments, unparseable literal or registry, unknown id.
    Usage(String),
    /// Reading or writing a file.
    Io(String),
    /// An ad-hoc evaluation failed in the engine.
    Engine(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Engine(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Io(m) | CliError::Engine(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    match commands::run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("squarint: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

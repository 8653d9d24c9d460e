//! Command-line front end: argument parsing, text output and exit codes.
//!
//! Exit codes: 0 for success or a true answer, 1 for a false answer or a
//! failed check, 2 for usage and input errors, 3 when an enumeration
//! budget is exceeded.

mod args;
mod commands;
mod facets;
mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use veronese_core::Error;

pub use args::parse_vector;
pub use facets::parse_facets;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Failure of a command, already mapped to an exit code.
#[derive(Debug)]
pub(crate) enum Failure {
    Usage(String),
    Core(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return EXIT_OK;
            }
            let rendered = e.render().to_string();
            let line = rendered.lines().next().unwrap_or("error: invalid arguments");
            let _ = writeln!(err, "{line}");
            return EXIT_USAGE;
        }
    };
    match commands::dispatch(cli.command, out) {
        Ok(code) => code,
        Err(failure) => {
            let (code, msg) = match failure {
                Failure::Usage(msg) => (EXIT_USAGE, msg),
                Failure::Io(e) => (EXIT_USAGE, e.to_string()),
                Failure::Core(e @ Error::BudgetExceeded { .. }) => (EXIT_BUDGET, e.to_string()),
                Failure::Core(e @ Error::NotAnFVector(_)) => (EXIT_FALSE, e.to_string()),
                Failure::Core(e @ Error::Consistency { .. }) => (EXIT_FALSE, e.to_string()),
                Failure::Core(e) => (EXIT_USAGE, e.to_string()),
            };
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

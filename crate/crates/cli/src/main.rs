//! Batch front end over the exactlab library. Each invocation runs one
//! subcommand, prints a JSON report on stdout and exits 0; usage errors
//! exit 2 and domain errors (singular matrix, bad bracket, unreadable
//! input) exit 1 with a message on stderr.

mod commands;
mod inputs;
mod report;

use clap::Parser;

use commands::Cli;

/// A domain-level failure: the arguments parsed but the computation or its
/// inputs were rejected.
#[derive(Debug)]
pub struct DomainError(pub String);

impl std::fmt::Display for DomainError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<E: std::error::Error> From<E> for DomainError {
    fn from(e: E) -> Self {
        DomainError(e.to_string())
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders --help and --version as "errors"; keep their
            // conventional exit status.
            if e.use_stderr() {
                eprint!("{e}");
                std::process::exit(2);
            }
            print!("{e}");
            std::process::exit(0);
        }
    };
    match commands::run(cli) {
        Ok(report) => {
            report.print();
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

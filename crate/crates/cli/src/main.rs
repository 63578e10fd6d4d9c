use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use cli::{execute, write_atomic, Cli};

fn main() -> ExitCode {
    let args = Cli::parse();
    let outcome = match execute(args) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &outcome.out {
        Some(path) => write_atomic(path, &outcome.text),
        None => std::io::stdout().write_all(outcome.text.as_bytes()).map_err(|e| cli::CliError::io("stdout", e)),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if outcome.passed { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}

//! The `monomial` command line: catalog and group inspection, kernel
//! verification, type-III scans, extension runs from Galois models or
//! delta files, tame Davenport-Hasse checks, and campaign files that batch
//! all of them into one deterministic report.

pub mod campaign;
pub mod checks;
mod commands;
mod error;
pub mod report;
pub mod target;

pub use campaign::{Campaign, Check, Target, TargetSpec};
pub use commands::{execute, Cli, Command, Outcome};
pub use error::CliError;
pub use report::{write_atomic, Line, Report, Verdict};

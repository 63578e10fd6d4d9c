use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("line {line}: {message}")]
    Campaign { line: usize, message: String },
    #[error("unknown group or unreadable group file: {0}")]
    UnknownGroup(String),
    #[error("bad normal-subgroup selector {selector:?}: {reason}")]
    Selector { selector: String, reason: String },
    #[error("bad model {0:?}; expected s3, unramified:Q:N, kummer:Q:M, bicyclic:Q:L or metacyclic:Q:L")]
    Model(String),
    #[error("{instance}: {message}")]
    Module { instance: String, message: String },
}

impl CliError {
    pub fn module(instance: &str, err: impl std::fmt::Display) -> CliError {
        CliError::Module { instance: instance.to_string(), message: err.to_string() }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> CliError {
        CliError::Io { path: path.into(), source }
    }
}

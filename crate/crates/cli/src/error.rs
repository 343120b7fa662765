use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: std::io::Error },

    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: std::io::Error },

    #[error("parse error: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid {field}: {message}")]
    Invalid { field: String, message: String },

    #[error(transparent)]
    Core(#[from] terrain_guard::Error),
}

impl CliError {
    pub fn invalid(field: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Invalid { field: field.into(), message: message.into() }
    }

    /// 1 for infeasible instances or solutions, 3 when the oracle cap is hit,
    /// 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(terrain_guard::Error::Infeasible { .. }) => 1,
            CliError::Core(terrain_guard::Error::CapExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

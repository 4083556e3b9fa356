use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input, or a model of the wrong kind.
    #[error("{0}")]
    Parse(String),

    #[error("{0}")]
    Validation(String),

    #[error("{0}")]
    Domain(String),

    #[error("{0}")]
    Resource(String),

    #[error("failed to write output: {0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Parse(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Domain(_) => 4,
            CliError::Resource(_) => 5,
            CliError::Output(_) => 1,
        })
    }
}

impl From<rps_core::Error> for CliError {
    fn from(e: rps_core::Error) -> Self {
        use rps_core::Error::*;
        let msg = e.to_string();
        match e {
            Validation(_) | FrameMismatch(_) => CliError::Validation(msg),
            Domain(_) | Numerical(_) => CliError::Domain(msg),
            Overflow(_) | CapExceeded { .. } => CliError::Resource(msg),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

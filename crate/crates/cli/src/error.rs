use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("dataset {name} not found: {reason}")]
    DatasetNotFound { name: String, reason: String },
    #[error("network error fetching {url}: {cause}")]
    Network { url: String, cause: String },
    #[error("downloaded file {path} does not parse: {cause}")]
    ParseFailureAfterDownload { path: PathBuf, cause: String },
    #[error("inconsistent run records: {0}")]
    InconsistentRecords(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] tser::Error),
    #[error("{failed} of {total} cells failed")]
    PartialFailure { failed: usize, total: usize },
}

impl CliError {
    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            context: context.into(),
            source,
        }
    }

    /// Process exit status: 1 usage, 2 data, 3 partial failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 1,
            CliError::PartialFailure { .. } => 3,
            _ => 2,
        }
    }
}

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Math(#[from] seedwave::Error),

    #[error("{0}")]
    Invalid(String),

    #[error("verification failed: {0}")]
    Failed(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {message}", path.display())]
    Parse { path: PathBuf, message: String },
}

impl CliError {
    /// 1 for validation and math failures, 2 for I/O and parse errors.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(_) | CliError::Invalid(_) | CliError::Failed(_) => 1,
            CliError::Io { .. } | CliError::Parse { .. } => 2,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(path: impl Into<PathBuf>, message: impl ToString) -> Self {
        CliError::Parse {
            path: path.into(),
            message: message.to_string(),
        }
    }
}

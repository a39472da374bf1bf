use std::path::PathBuf;

use formarea_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Accuracy(String),
    /// Some check or bound failed; the report has already been written.
    #[error("{0}")]
    Verification(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::Accuracy(_) => 2,
            CliError::Verification(_) => 3,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Accuracy { .. } | CoreError::Precision { .. } => {
                CliError::Accuracy(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

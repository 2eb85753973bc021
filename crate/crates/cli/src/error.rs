use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] mweb_core::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: mweb_core::Error,
    },

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 3 for capacity errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(mweb_core::Error::Capacity(_))
            | CliError::File { source: mweb_core::Error::Capacity(_), .. } => 3,
            _ => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

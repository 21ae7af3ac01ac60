use std::path::PathBuf;

use algframe_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{0} validation failure(s)")]
    Validation(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// 1 for counterexamples, 3 for capacity, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_) => 1,
            Error::Core(CoreError::Capacity { .. }) => 3,
            _ => 2,
        }
    }
}

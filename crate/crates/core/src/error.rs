use std::path::PathBuf;

use thiserror::Error;

/// Errors raised while constructing points or updating an archive.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ArchiveError {
    #[error("a point needs at least 2 objectives, got {0}")]
    TooFewObjectives(usize),

    #[error("objective {index} is not finite ({value})")]
    NonFinite { index: usize, value: f64 },

    #[error("dimension mismatch: archive holds {expected}-objective points, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("backend `{backend}` does not support {p} objectives")]
    UnsupportedDimension { backend: &'static str, p: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("empty input")]
    EmptyInput,
}

/// Errors raised while reading or writing stream, CSV and front files.
#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl IoError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        IoError::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        IoError::Parse {
            line,
            message: message.into(),
        }
    }
}

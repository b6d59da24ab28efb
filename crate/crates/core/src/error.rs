use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied value is outside its contract.
    #[error("invalid {field}: {message}")]
    Validation { field: String, message: String },

    /// A metric name that is not in the registry.
    #[error("unknown metric `{name}`; valid metrics: {valid}")]
    UnknownMetric { name: String, valid: String },

    /// A malformed row in an input table. `line` is 1-based.
    #[error("{path}: line {line}: {message}")]
    Parse {
        path: PathBuf,
        line: u64,
        message: String,
    },

    #[error("curve entirely undefined")]
    CurveUndefined,

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            field: field.into(),
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for errors caused by bad arguments rather than bad files or I/O.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Validation { .. } | Error::UnknownMetric { .. })
    }
}

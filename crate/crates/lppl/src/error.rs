//! Crate-wide error type.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// An observation time at or beyond the critical time: the model has a
    /// logarithm/power of a non-positive distance there. A hard error rather
    /// than a NaN so optimizers cannot silently absorb it.
    #[error("time {t} is not strictly before t_c = {t_c}{}", index.map(|i| format!(" (series index {i})")).unwrap_or_default())]
    Domain {
        t: f64,
        t_c: f64,
        index: Option<usize>,
    },

    #[error("insufficient data: {actual} points, need at least {required}")]
    InsufficientData { required: usize, actual: usize },

    #[error("degenerate regressors: normal-equation condition estimate {condition:.3e} exceeds 1e12")]
    DegenerateRegressors { condition: f64 },

    #[error("degenerate data: {0}")]
    DegenerateData(String),

    #[error("{path}: line {line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn parse(path: impl Into<PathBuf>, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            message: message.into(),
        }
    }
}

use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by loading, indexing, scoring, training, and evaluation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("index contains no documents")]
    EmptyIndex,

    #[error("field `{0}` contains no terms")]
    EmptyField(&'static str),

    #[error("unknown document id `{0}`")]
    UnknownDocument(String),

    #[error("invalid field weights: {0}")]
    InvalidWeights(String),

    #[error("document length and smoothing parameter are both zero")]
    DegenerateSmoothing,

    #[error("table `{0}` has no data rows or columns")]
    NoDataCells(String),

    #[error("term kind does not match the semantic space ({0})")]
    IncompatibleTermKind(&'static str),

    #[error("training data is empty")]
    EmptyTrainingData,

    #[error("feature dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{folds}-fold cross-validation needs at least {folds} queries, got {queries}")]
    TooFewQueries { folds: usize, queries: usize },

    #[error("paired test needs at least two aligned samples")]
    TooFewSamples,

    #[error("method `{method}` does not cover the same queries as `{baseline}`")]
    QueryCoverage { method: String, baseline: String },

    #[error("snapshot {path}: {message}")]
    Snapshot { path: PathBuf, message: String },

    #[error("{0}")]
    InvalidInput(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(path: impl Into<PathBuf>, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

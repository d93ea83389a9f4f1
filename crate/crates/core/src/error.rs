use std::path::PathBuf;
use thiserror::Error;

/// Errors produced by the pipeline library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("cannot upsample: target {target_hz} Hz exceeds source {source_hz} Hz")]
    UnsupportedUpsample { source_hz: f64, target_hz: f64 },

    #[error("recording too short for a single {0} s epoch")]
    EmptyEpochs(f64),

    #[error("need at least {min} channels, got {got}")]
    InsufficientChannels { min: usize, got: usize },

    #[error("channel mapping error: {0}")]
    Mapping(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("empty dataset: {0}")]
    EmptyDataset(String),

    #[error("schema mismatch: {0}")]
    Schema(String),

    #[error("model type error: {0}")]
    ModelType(String),

    #[error("render error: {0}")]
    Render(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub fn parse(path: impl Into<PathBuf>, message: impl Into<String>) -> Self {
        Error::Parse { path: path.into(), message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

//! Error types shared across the pipeline.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid window: width must be positive, got {width}")]
    InvalidWindow { width: f64 },

    #[error("encoding mismatch: expected {expected} intensity grid")]
    EncodingMismatch { expected: &'static str },

    #[error("shape mismatch: {context} (got {got:?}, expected {expected:?})")]
    ShapeMismatch {
        context: String,
        got: (usize, usize),
        expected: (usize, usize),
    },

    #[error("label {label} not present in schema of {size} entries")]
    SchemaViolation { label: u8, size: usize },

    #[error("invalid label schema: {0}")]
    InvalidSchema(String),

    #[error("manifest file not found: {0}")]
    ManifestMissing(PathBuf),

    #[error("manifest parse error in {path}: {source}")]
    ManifestParse {
        path: PathBuf,
        source: serde_json::Error,
    },

    #[error("duplicate sample id in manifest: {0}")]
    DuplicateSampleId(String),

    #[error("sample {id} references missing file {path}")]
    DanglingSamplePath { id: String, path: PathBuf },

    #[error("unknown backbone layer: {0}")]
    UnknownLayer(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("non-finite value encountered during {0}")]
    NonFinite(String),

    #[error("dataset has no samples for split {0}")]
    EmptySplit(String),

    #[error("phantom geometry degenerate after {0} resampling attempts")]
    DegenerateGeometry(usize),

    #[error("checkpoint format error: {0}")]
    CheckpointFormat(String),

    #[error("stage {stage} failed: {message}")]
    StageFailed { stage: String, message: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("image codec error on {path}: {source}")]
    Image {
        path: PathBuf,
        source: image::ImageError,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn image(path: impl Into<PathBuf>, source: image::ImageError) -> Self {
        Error::Image {
            path: path.into(),
            source,
        }
    }
}

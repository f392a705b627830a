use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced by the analysis pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("image decode failed: {0}")]
    Decode(#[from] image::ImageError),

    #[error("geometry error: {0}")]
    Geometry(String),

    #[error("invalid distance matrix: {0}")]
    InvalidDistance(String),

    #[error("unknown leaf id {0}")]
    UnknownLeaf(usize),

    #[error("data error: {0}")]
    Data(String),

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("cell selection error: {0}")]
    Selection(String),

    #[error("palette is empty: no purple pixels identified in the focal area")]
    EmptyPalette,

    #[error("config error: {0}")]
    Config(String),

    #[error("missing upstream artifact: {0} (run the producing stage first)")]
    MissingArtifact(PathBuf),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid set partition: {0}")]
    InvalidPartition(String),
    #[error("invalid plabic graph: {0}")]
    InvalidGraph(String),
    #[error("graph has no perfect orientation")]
    NotOrientable,
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),
    #[error("invalid labelling: {0}")]
    InvalidLabelling(String),
    #[error("valid coloring failed: {0}")]
    Coloring(String),
    #[error("polynomial is not in the span of the basis")]
    NotInSpan,
    #[error("no reducible feature")]
    NoReducibleFeature,
    #[error("skein rewrite failed: {0}")]
    Skein(String),
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

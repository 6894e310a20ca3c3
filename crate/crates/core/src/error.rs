use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid configuration (grid sizes, manifest fields, file formats).
    #[error("configuration error: {0}")]
    Config(String),
    /// Invalid operation parameter; the message names the violated bound.
    #[error("parameter error: {0}")]
    Parameter(String),
    /// A sample with a vanishing denominator; callers discard it.
    #[error("degenerate sample: {0}")]
    Degenerate(String),
    /// Non-finite values appeared during time stepping.
    #[error("blow-up signal at t = {t}")]
    BlowUp { t: f64 },
    #[error("grid mismatch: {0}")]
    GridMismatch(String),
    #[error("snapshot mismatch: {0}")]
    SnapshotMismatch(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

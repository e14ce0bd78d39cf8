//! IO side of the pedestal toolkit: JSON formats, multi-threaded verifier
//! drivers and the `pedestal` command line. All mathematics lives in
//! `pedestal-core`.

pub mod app;
pub mod json;
pub mod parallel;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] pedestal_core::Error),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] pedestal_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("io: {0}")]
    Io(String),
}

//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the library and surfaced by the CLI.
#[derive(Debug, Error)]
pub enum Error {
    /// A diagram name or (family, rank) combination is invalid.
    #[error("invalid diagram: {0}")]
    BadDiagram(String),
    /// Bad user input (CLI arguments, malformed golden file, ...).
    #[error("invalid input: {0}")]
    BadInput(String),
    /// A verification claim failed.
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    /// I/O error (golden table files, DOT export).
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    /// JSON (de)serialization error.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

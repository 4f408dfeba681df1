use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid spectrum: {0}")]
    Spectrum(String),

    #[error("operation requires dimension {expected}, spectrum has {got}")]
    Dimension { expected: u32, got: u32 },

    #[error("spectrum is not minimal: trace = {trace:e}")]
    NotMinimal { trace: f64 },

    #[error("{0}")]
    Domain(String),

    #[error("integration failed: {0}")]
    Integration(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

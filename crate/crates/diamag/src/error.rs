use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid or inconsistent configuration (missing defect entry, bad basis, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// The adaptive integrator could not proceed (step-size underflow, step cap).
    #[error("integration failure: {0}")]
    Integration(String),

    /// A semiclassical amplitude was requested for a degenerate (focal) orbit.
    #[error("degenerate orbit: {0}")]
    Degenerate(String),

    /// An argument is outside the operation's domain (e.g. ghost at ε ≥ ε_b).
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation outside a file-loaded grid.
    #[error("range error: {0}")]
    Range(String),

    /// Malformed input file.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Two data sets that must share a grid do not.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Crate-wide error type.
//!
//! Every fallible operation returns [`Error`]. The CLI maps variants onto
//! process exit codes: configuration problems exit 2, numerical failures
//! exit 3, and file-format or I/O failures exit 4.

use thiserror::Error;

/// Unified error type for all modules.
#[derive(Debug, Error)]
pub enum Error {
    /// Operand shapes are incompatible.
    #[error("shape mismatch: {context} (left {left_rows}x{left_cols}, right {right_rows}x{right_cols})")]
    Shape {
        context: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    /// An adapter rank is outside the valid range for the base matrix.
    #[error("rank {rank} out of range: must be {min}..={max}")]
    Rank { rank: usize, min: usize, max: usize },

    /// A scalar argument is outside its documented domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The problem configuration violates the regime the analysis assumes.
    #[error("regime error: {0}")]
    Regime(String),

    /// An input violates a caller-side contract (e.g. asymmetric matrix).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Gradient descent left the representable range.
    #[error("divergence at step {step}: parameter norm exceeded {limit:e}")]
    Divergence { step: usize, limit: f64 },

    /// An iterative numerical routine failed (non-convergence, non-finite values).
    #[error("numerical error: {0}")]
    Numerical(String),

    /// A serialized archive does not follow the container format.
    #[error("format error: {0}")]
    Format(String),

    /// A serialized archive is internally inconsistent or truncated.
    #[error("corruption error: {context} (expected {expected} bytes, found {actual})")]
    Corruption {
        context: String,
        expected: u64,
        actual: u64,
    },

    /// Semantic validation failed (duplicate names, non-finite payload, bad rows).
    #[error("validation error: {0}")]
    Validation(String),

    /// An experiment configuration is invalid; all violations are listed.
    #[error("invalid configuration:\n{}", .issues.join("\n"))]
    InvalidConfig { issues: Vec<String> },

    /// Underlying I/O failure, annotated with the path involved.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Exit code the CLI uses for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidConfig { .. } => 2,
            Error::Shape { .. }
            | Error::Rank { .. }
            | Error::Domain(_)
            | Error::Regime(_)
            | Error::Contract(_)
            | Error::Divergence { .. }
            | Error::Numerical(_) => 3,
            Error::Format(_)
            | Error::Corruption { .. }
            | Error::Validation(_)
            | Error::Io { .. } => 4,
        }
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Operand shapes are incompatible for an operation.
    #[error("dimension mismatch in {op}: {lhs:?} vs {rhs:?}")]
    DimensionMismatch {
        op: &'static str,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },

    /// A caller supplied an invalid argument (empty input, bad flag value, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A feature id does not fit the vocabulary / embedding table.
    #[error("feature id {id} out of range for vocabulary of size {size}")]
    IndexOutOfRange { id: usize, size: usize },

    /// A data file line could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Instance contents do not match the declared schema.
    #[error("schema error: {0}")]
    Schema(String),

    /// An instance from the wrong domain reached a domain-specific path.
    #[error("domain error: {0}")]
    Domain(String),

    /// Invalid run configuration (missing splits, inconsistent settings, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// A metric is undefined on the given inputs (e.g. single-class AUC).
    #[error("metric undefined: {0}")]
    UndefinedMetric(String),

    /// Optimizer was asked to step a parameter in an invalid state.
    #[error("optimizer state error: {0}")]
    OptimizerState(String),

    /// Checkpoint file is unreadable, truncated, or version-incompatible.
    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

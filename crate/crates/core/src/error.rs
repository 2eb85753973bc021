use thiserror::Error;

/// Errors produced across the toolkit.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("validation error: {0}")]
    Validation(String),

    #[error("{side} index {index} out of range (size {len})")]
    IndexOutOfRange {
        side: Side,
        index: usize,
        len: usize,
    },

    #[error("trivial instance: weights do not take both signs (min {min}, max {max})")]
    TrivialInstance { min: f64, max: f64 },

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("degenerate density: matrix must contain both 0 and 1 entries")]
    DegenerateDensity,

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Side of a bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

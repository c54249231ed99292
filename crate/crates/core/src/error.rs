use thiserror::Error;

/// Errors shared by all modules. Every computation is exact, so an error
/// always means a structural problem (bad shapes, degenerate chart point,
/// malformed input), never a numerical tolerance issue.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("singular matrix (rank {rank} of {dim})")]
    Singular { rank: usize, dim: usize },

    #[error("index error: {0}")]
    Index(String),

    #[error("size error: {0}")]
    Size(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("degenerate chart point: {0} vanishes")]
    Degenerate(String),

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("invalid embedding: {0}")]
    Embedding(String),

    #[error("consistency error: {0}")]
    Consistency(String),

    #[error("inversion error: entry ({row},{col}) of the boundary partition function is inconsistent")]
    Inversion { row: usize, col: usize },

    #[error("chamber evaluation error: missing subset {0}")]
    MissingSubset(String),

    #[error("parabolic degeneracy: the row products coincide")]
    Parabolic,

    #[error("pole: {0} vanishes")]
    Pole(String),
}

pub type Result<T> = std::result::Result<T, Error>;

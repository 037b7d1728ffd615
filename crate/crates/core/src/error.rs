use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Coxeter type: {0}")]
    InvalidType(String),

    #[error("generator index {index} out of range 1..={rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("elements belong to different Coxeter systems")]
    SystemMismatch,

    #[error("move not applicable at position {pos}: {reason}")]
    InapplicableMove { pos: usize, reason: String },

    #[error("word is not a Coxeter element word: {0}")]
    NotCoxeterWord(String),

    #[error("search budget of {budget} visited words exhausted")]
    BudgetExhausted { budget: usize },

    #[error("not a face of the complex: {{{0}}}")]
    NotAFace(String),

    #[error("not an edge of the complex: {{{0}}}")]
    NotAnEdge(String),

    #[error("vertex label already in use: {0}")]
    LabelCollision(String),

    #[error("vertex not in the complex: {0}")]
    NoSuchVertex(String),

    #[error("complex is not pure")]
    NotPure,

    #[error("position {pos} out of range 1..={len}")]
    PositionOutOfRange { pos: usize, len: usize },

    #[error("complex is not spherical: Demazure product differs from rho")]
    NotSpherical,

    #[error("invalid transform script: {0}")]
    InvalidScript(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

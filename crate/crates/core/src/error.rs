use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index out of bounds: position {index} in a word of length {len}")]
    IndexOutOfBounds { index: usize, len: usize },
    #[error("word length {0} exceeds the supported maximum of 64")]
    WordTooLong(usize),
    #[error("invalid word {0:?}: only 0 and 1 are allowed")]
    InvalidWord(String),
    #[error("word length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("invalid cube parameters: {0}")]
    InvalidParams(String),
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("graph carries no word labels")]
    Unlabeled,
    #[error("graph too large for exact isomorphism ({0} vertices, limit 64)")]
    TooLargeForIsomorphism(usize),
    #[error("graph too large for relation computation ({0} vertices, limit 2000)")]
    TooLargeForRelations(usize),
    #[error("theta relation undefined on a disconnected graph")]
    Disconnected,
    #[error("trivial graph: at least two vertices are required")]
    Trivial,
    #[error("not a product coloring")]
    NotProductColoring,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

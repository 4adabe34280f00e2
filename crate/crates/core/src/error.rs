use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop arc {0} -> {0}")]
    Loop(usize),

    #[error("duplicate arc {tail} -> {head}")]
    DuplicateArc { tail: usize, head: usize },

    #[error("vertex {0} is not part of the graph")]
    MissingVertex(usize),

    #[error("arc {tail} -> {head} is not an arc of the graph")]
    ArcNotInGraph { tail: usize, head: usize },

    #[error("span {{{lo},{hi}}} is not the span of any arc")]
    SpanNotFound { lo: usize, hi: usize },

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("arc set has length {found}, expected {expected}")]
    ArcSetLength { expected: usize, found: usize },

    #[error("pre-tree already spans the graph")]
    AlreadySpanning,

    #[error("pre-trees of mixed generations: {0} and {1}")]
    MixedGenerations(usize, usize),

    #[error("integer overflow during exact determinant evaluation")]
    Overflow,

    #[error("limit of {0} exceeded")]
    LimitExceeded(usize),

    #[error("{what} size {size} exceeds oracle bound {bound}")]
    OracleBound {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("maximality check failed at level {level}")]
    NotMaximal { level: usize },
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Loops, parallel edges, out-of-range ids, duplicate points.
    #[error("malformed graph: {0}")]
    MalformedGraph(String),

    #[error("graph is disconnected")]
    Disconnected,

    /// The rotation or geometry does not describe a plane embedding.
    #[error("not a planar embedding: {0}")]
    NotPlanarEmbedding(String),

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("outer face cannot be colored monochromatically")]
    InvalidOuterColoring,

    /// Something the theory rules out happened; the inputs were corrupted upstream.
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    #[error("exhaustive search is capped at {cap} vertices, got {n}")]
    OracleTooLarge { n: usize, cap: usize },

    #[error("rendering needs vertex coordinates")]
    RenderUnavailable,
}

impl Error {
    pub(crate) fn malformed(msg: impl Into<String>) -> Self {
        Error::MalformedGraph(msg.into())
    }

    pub(crate) fn not_planar(msg: impl Into<String>) -> Self {
        Error::NotPlanarEmbedding(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::InternalInvariantViolation(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::PreconditionViolation(msg.into())
    }
}

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("{u}-{v} is not an edge of the graph")]
    NotAnEdge { u: usize, v: usize },

    #[error("expected {expected} vertex labels, found {found}")]
    LabelCount { expected: usize, found: usize },

    #[error("fault sets must be distinct")]
    EqualFaultSets,

    #[error("graph is not regular (degrees range over {min}..={max})")]
    NotRegular { min: usize, max: usize },

    #[error("syndrome covers {found} test units, graph has {expected}")]
    SyndromeMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An internally constructed certificate failed re-validation.
    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

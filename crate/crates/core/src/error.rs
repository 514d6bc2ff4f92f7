use thiserror::Error;

/// Errors raised by graph construction, transport and curvature routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("edge ({x}, {y}) has unequal degrees {dx} and {dy}")]
    UnequalDegrees { x: usize, y: usize, dx: usize, dy: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("idleness {0} outside [0, 1]")]
    IdlenessOutOfRange(String),

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("supports are disconnected: no path from {0} to {1}")]
    Disconnected(usize, usize),

    #[error("scaled instance too large: {0}")]
    Overflow(String),

    #[error("oracle token bound exceeded: {tokens} > {limit}")]
    TokenBound { tokens: u64, limit: u64 },

    #[error("cost matrix is not square")]
    NotSquare,

    #[error("parse error at {position}: {message}")]
    Parse { position: String, message: String },

    #[error("curvature routes disagree on edge ({0}, {1})")]
    RouteMismatch(usize, usize),

    #[error("idleness function failed to stabilize on edge ({0}, {1})")]
    Unstable(usize, usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(position: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            position: position.into(),
            message: message.into(),
        }
    }
}

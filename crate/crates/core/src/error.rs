use thiserror::Error;

/// Errors raised by graph construction, parsing and the invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("vertex set must be a proper subset of the vertices")]
    FullSet,
    #[error("vertex set does not induce a connected subgraph")]
    DisconnectedSet,
    #[error("graph must be connected")]
    DisconnectedGraph,
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("eggs must be disjoint")]
    OverlappingEggs,
    #[error("scramble has no eggs")]
    EmptyScramble,
    #[error("graph is not bipartite (odd cycle through vertex {0})")]
    NotBipartite(usize),
    #[error("graph must be simple (parallel edges between {0} and {1})")]
    NotSimple(usize, usize),
    #[error("divisor has {got} entries, graph has {n} vertices")]
    DivisorLength { got: usize, n: usize },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

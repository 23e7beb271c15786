use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failures surfaced by tree construction, parsing, operations, and caps.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("a tree needs at least one vertex")]
    NoVertices,

    #[error("vertex {vertex} out of range for a tree on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("root {root} out of range for a tree on {n} vertices")]
    RootOutOfRange { root: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("a tree on {n} vertices needs exactly n-1 edges, got {edges}")]
    WrongEdgeCount { n: usize, edges: usize },

    #[error("the edge set does not connect all {0} vertices")]
    Disconnected(usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("operation target does not exist: {0}")]
    MissingTarget(String),

    #[error("operation would disconnect the tree: {0}")]
    WouldDisconnect(String),

    #[error("vertex {vertex} has degree {degree}, dissolution needs degree 2")]
    NotDegree2 { vertex: usize, degree: usize },

    #[error("size {n} exceeds the configured cap of {cap}")]
    SizeLimitExceeded { n: usize, cap: usize },

    #[error("composition needs the first model's host to equal the second model's pattern")]
    HostPatternMismatch,

    #[error("vertex {0} is not a child of the root")]
    NotAChild(usize),

    #[error("bad parameters: {0}")]
    BadParams(String),
}

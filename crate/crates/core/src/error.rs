use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("pair ({0}, {1}) is already an edge, cannot add")]
    AddExistingEdge(usize, usize),

    #[error("pair ({0}, {1}) is not an edge, cannot delete")]
    DeleteMissingEdge(usize, usize),

    #[error("graph is not chordal")]
    NotChordal,

    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("weights must be positive")]
    NonPositiveWeight,

    #[error("weight map does not cover vertex {0}")]
    MissingWeight(usize),

    #[error("triple {0:?} is not an asteroidal triple")]
    NotAsteroidalTriple([usize; 3]),

    #[error("vertex set {0:?} is not a vertex cover: edge ({1}, {2}) uncovered")]
    NotVertexCover(Vec<usize>, usize, usize),

    #[error("instance too large for exhaustive search (n = {0}, guard = {1})")]
    OracleSizeGuard(usize, usize),

    #[error("{path}:{line}: {reason}")]
    ParseError {
        path: String,
        line: usize,
        reason: String,
    },

    #[error("invalid configuration: {0}")]
    BadConfig(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

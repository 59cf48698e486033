use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{n} vertices exceeds the limit of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),

    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },

    #[error("graph is not chordal (vertex {witness} is not simplicial in the elimination order)")]
    NotChordal { witness: usize },

    #[error("graph has no edges")]
    NoEdges,

    #[error("graph has isolated vertex {0}")]
    IsolatedVertex(usize),

    #[error("{what}: size {size} exceeds cap {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("generators {first} and {second} are comparable under divisibility")]
    NonMinimalGenerators { first: usize, second: usize },

    #[error("facets {first} and {second} are comparable under inclusion")]
    ComparableFacets { first: usize, second: usize },

    #[error("ordering fails linear quotients: generator {earlier} has no linear witness at position {position}")]
    NotLinearQuotients { earlier: usize, position: usize },

    #[error("invalid pivot: {0}")]
    InvalidPivot(String),

    #[error("invalid sub-ordering: {0}")]
    InvalidSubOrdering(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

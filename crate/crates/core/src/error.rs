use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} outside supported range 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("malformed graph: {0}")]
    Malformed(String),
    #[error("graph not connected")]
    NotConnected,
    #[error("cone apex would be isolated: input is a complete graph")]
    CompleteGraph,
    #[error("conductance requires n <= {max}, got {n}")]
    ConductanceTooLarge { n: usize, max: usize },
    #[error("conductance needs at least 2 vertices")]
    ConductanceTooSmall,
    #[error("{what} supports n in {min}..={max}, got {n}")]
    UnsupportedOrder {
        what: &'static str,
        n: usize,
        min: usize,
        max: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 parse error at byte {offset}: {reason}")]
pub struct Graph6Error {
    pub offset: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("unsupported matrix kind {kind} for {what}")]
    UnsupportedKind {
        kind: &'static str,
        what: &'static str,
    },
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("census input mixes vertex counts {expected} and {found}")]
    MixedOrder { expected: usize, found: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

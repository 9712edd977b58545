use thiserror::Error;

/// Failure to read the edge-list text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number in the input text.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing vertex count")]
    MissingVertexCount,
    #[error("malformed line {0:?}")]
    Malformed(String),
    #[error("vertex {vertex} out of range for n = {n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// Violated preconditions on graph-level operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set is not a clique")]
    NotAClique,
    #[error("vertex set is not strictly increasing")]
    UnsortedVertexSet,
    #[error("order is not a permutation of the vertices")]
    NotAPermutation,
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
}

/// Refusal by a brute-force oracle to run past its size limit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} = {size} exceeds the oracle limit of {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

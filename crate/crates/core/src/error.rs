use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("edge probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("vertex {0} appears twice in the ordering")]
    NotAPermutation(usize),
    #[error("corrupt graph: {0}")]
    Corrupt(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct DimacsError {
    /// 1-based line number; 0 when the problem concerns the whole input.
    pub line: usize,
    pub kind: DimacsErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimacsErrorKind {
    #[error("input is not ASCII")]
    NotAscii,
    #[error("missing `p edge <n> <m>` line")]
    MissingProblemLine,
    #[error("duplicate problem line")]
    DuplicateProblemLine,
    #[error("edge line before the problem line")]
    EdgeBeforeProblemLine,
    #[error("endpoint {endpoint} outside [1, {n}]")]
    EndpointOutOfRange { endpoint: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("malformed line: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("graph has {n} vertices, oracle limit is {limit}")]
    OracleTooLarge { n: usize, limit: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph of order {order} exceeds the limit of {limit} vertices")]
    OrderTooLarge { order: usize, limit: usize },

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("family `{family}` expects {expected} parameter(s), got {got}")]
    BadArity {
        family: String,
        expected: usize,
        got: usize,
    },

    #[error("invalid parameter: {0}")]
    BadParameter(String),

    #[error("token count {k} out of range for base graph of order {n}")]
    TokenCountOutOfRange { k: usize, n: usize },

    #[error("subset has {got} elements, expected {expected}")]
    SubsetSize { expected: usize, got: usize },

    #[error("rank {rank} out of range (only {count} subsets)")]
    RankOutOfRange { rank: u64, count: u64 },

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("invalid independent set: {0}")]
    InvalidIndependentSet(String),

    #[error("solver budget exceeded")]
    BudgetExceeded,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown sequence `{0}`")]
    UnknownSequence(String),

    #[error("unknown verification target `{0}`")]
    UnknownTarget(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

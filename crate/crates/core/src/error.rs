use thiserror::Error;

/// Errors raised by graph construction, parsing and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("invalid edge ({u}, {v}) for a graph on {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    InvalidVertex { v: usize, n: usize },
    #[error("vertex set ambient size {found} does not match graph order {expected}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotTree,
    #[error("graph does not have exactly one maximal clique of size greater than 2")]
    NotSingleClique,
    #[error("inconsistent forcing trace: {0}")]
    InvalidTrace(String),
    #[error("search budget of {budget} candidates exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("graph on {n} vertices exceeds the supported size {limit} for this operation")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid family parameters: {0}")]
    Family(String),
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

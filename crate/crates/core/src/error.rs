use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on node {node}: input must be a simple graph")]
    SelfLoopInInput { node: u64 },
    #[error("duplicate edge {u}-{v}: input must be a simple graph")]
    DuplicateEdge { u: u64, v: u64 },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("header declares {declared} {what} but the body has {found}")]
    HeaderMismatch {
        what: &'static str,
        declared: usize,
        found: usize,
    },
    #[error("edge {edge} has no direction in the assignment")]
    IncompleteAssignment { edge: usize },
    #[error("arc {u}->{v} does not match any edge, or repeats one")]
    UnknownArc { u: usize, v: usize },
    #[error("chain length {0} is below 2")]
    InvalidChainLength(usize),
    #[error("multigraph has no cycle")]
    AcyclicMultigraph,
    #[error("{m} edges exceeds the brute-force limit of {limit}")]
    TooLarge { m: usize, limit: usize },
}

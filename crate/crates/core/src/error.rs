use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    InvalidEdge { u: usize, v: usize, n: usize },

    #[error("self-loop on node {0}")]
    SelfLoop(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid instance spec: {0}")]
    InvalidSpec(String),

    #[error("ear is not open with respect to the current subgraph: {0}")]
    EarNotOpen(String),

    #[error("ear has no inner nodes")]
    EmptyInner,

    #[error("candidate list is empty")]
    EmptyList,

    #[error("induced subgraph is not connected")]
    DisconnectedInput,

    #[error("input set is not a feasible 2-connected {m}-dominating set")]
    InfeasibleInput { m: usize },

    #[error("graph has {n} nodes, exact search is limited to {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error(transparent)]
    Io(#[from] io::Error),
}

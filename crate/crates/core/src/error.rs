use thiserror::Error;

use crate::graph::{Side, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: edge {a}-{b} joins two vertices of the same class")]
    SameClassEdge { line: usize, a: String, b: String },
    #[error("line {line}: duplicate edge {a}-{b}")]
    DuplicateEdge { line: usize, a: String, b: String },
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("unknown arc {0}")]
    UnknownArc(usize),
    #[error("graph is empty")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has a universal vertex {0}")]
    UniversalVertex(Vertex),
    #[error("graph is not bipartite distance-hereditary")]
    NotBdh,
    #[error("graph is not Ptolemaic")]
    NotPtolemaic,
    #[error("invalid pruning sequence: {0}")]
    InvalidSequence(String),
    #[error("vertex {0} is on the wrong side for this encoding")]
    WrongSide(Vertex),
    #[error("encoding has arcs labeled by class {found}, expected {expected}")]
    ArcSide { expected: Side, found: Side },
    #[error("empty vertex set")]
    EmptySet,
    #[error("size limit exceeded: {what} is {size}, limit {limit}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("cannot satisfy request: {0}")]
    Unsatisfiable(String),
    #[error("internal disagreement: {0}")]
    Disagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::recognition::PatternMatch;

/// Errors from graph construction and basic queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graph on {order} vertices exceeds the supported size {max}")]
    UnsupportedSize { order: usize, max: usize },
    #[error("operation needs a graph with at least one vertex")]
    EmptyGraph,
}

/// Errors from the structural algorithms (buoys, prime classification, half-graphs).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is not prime")]
    NotPrime,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph contains a forbidden {} at {:?}", .0.pattern, .0.vertices)]
    ClassViolation(PatternMatch),
    #[error("vertices {0:?} do not induce a C5 in that cyclic order")]
    NotInducedC5(Vec<usize>),
    #[error("buoy on {0:?} is neither the whole graph nor a module")]
    BuoyNotModule(Vec<usize>),
    #[error("half-graph size {0} is too small (need k >= 2)")]
    HalfGraphTooSmall(usize),
}

/// Errors from parsing graph documents.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("offset {offset}: {message}")]
    Offset { offset: usize, message: String },
}

/// Errors from the verification harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("unknown mutation `{0}`")]
    UnknownMutation(String),
    #[error("refusing exhaustive enumeration on {order} vertices (max {max})")]
    SpaceTooLarge { order: usize, max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

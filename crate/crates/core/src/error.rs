use thiserror::Error;

use crate::graph::{EdgeId, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: Vertex, count: usize },
    #[error("self loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("vertex {0} has more than one parent")]
    MultipleParents(Vertex),
    #[error("root {0} appears as a child")]
    RootHasParent(Vertex),
    #[error("vertex {0} is not reachable from the root")]
    Disconnected(Vertex),
    #[error("rotation system is not symmetric at edge {0}-{1}")]
    AsymmetricRotation(Vertex, Vertex),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HalinError {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("not a Halin characteristic tree: {reason} (vertex {vertex})")]
    NotAHalinTree { vertex: Vertex, reason: &'static str },
    #[error("vertex {0} is not an internal tree vertex")]
    NotInternalVertex(Vertex),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("edge {edge} has color {color} outside palette 1..={palette}")]
    ColorOutOfRange { edge: EdgeId, color: u32, palette: u32 },
    #[error("coloring covers {got} edges, graph has {expected}")]
    LengthMismatch { got: usize, expected: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header `{0}`")]
    MissingHeader(&'static str),
    #[error(transparent)]
    Halin(#[from] HalinError),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

impl FormatError {
    pub(crate) fn syntax(line: usize, message: impl Into<String>) -> Self {
        FormatError::Syntax { line, message: message.into() }
    }
}

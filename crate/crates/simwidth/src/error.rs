use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("{0} {1} is not an edge")]
    NotAnEdge(VertexId, VertexId),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("graph is not chordal; induced cycle {0:?}")]
    NotChordal(Vec<VertexId>),
    #[error("not a co-comparability ordering; violating triple {0:?}")]
    NotCocompOrdering((VertexId, VertexId, VertexId)),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("decomposition does not match graph: {0}")]
    Mismatch(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{what} needs n <= {limit}, got {n}")]
    Budget { what: &'static str, limit: usize, n: usize },
    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors from decoding graph text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("malformed graph6 size header at byte {offset}")]
    BadHeader { offset: usize },
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("graph6 payload truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage starting at byte {offset}")]
    TrailingGarbage { offset: usize },
    #[error("nonzero padding bits in final graph6 byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("graph has {n} vertices; at most 64 are supported (byte offset {offset})")]
    TooManyVertices { n: usize, offset: usize },
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("line {line}: expected an integer, found {token:?}")]
    NotAnInteger { line: usize, token: String },
    #[error("line {line}: expected two endpoints")]
    BadEdgeLine { line: usize },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("bad family spec {0:?}")]
    BadFamily(String),
}

/// Errors raised by the solvers and checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{source_name}:{line}: {error}")]
    Input { source_name: String, line: usize, error: ParseError },
    #[error("assignment is bound to graph {assignment:?}, not {graph:?}")]
    GraphMismatch { graph: String, assignment: String },
    #[error("invalid assignment: {0}")]
    InvalidAssignment(String),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("size limit exceeded: {0}")]
    TooLarge(String),
    #[error("no cached entry for {0}")]
    CacheMiss(String),
    #[error("integrity error: {0}")]
    Integrity(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

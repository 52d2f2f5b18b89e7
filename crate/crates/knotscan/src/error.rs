use thiserror::Error;

/// Errors from graph construction and surgery.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {n} vertices, maximum supported is 62")]
    TooManyVertices { n: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("no edge ({u}, {v})")]
    NoSuchEdge { u: usize, v: usize },
    #[error("self-loop at vertex {v} not allowed")]
    SelfLoop { v: usize },
    #[error("part list must be nonempty")]
    EmptyParts,
    #[error("part sizes must be positive")]
    ZeroPartSize,
    #[error("{parts} parts exceed the a..z labeling range")]
    TooManyParts { parts: usize },
    #[error("unknown part letter '{letter}'")]
    UnknownPart { letter: char },
    #[error("index {index} out of range for part '{letter}' of size {size}")]
    IndexOutOfPart {
        letter: char,
        index: usize,
        size: usize,
    },
    #[error("split bipartition must partition the neighbors of the vertex")]
    BadBipartition,
    #[error("vertices {0:?} do not form a triangle")]
    NotATriangle([usize; 3]),
    #[error("vertex {v} has degree {degree}, expected 3")]
    DegreeNotThree { v: usize, degree: usize },
}

/// Errors from graph6 decoding.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid graph6 byte {byte:#04x} at position {pos}")]
    InvalidByte { byte: u8, pos: usize },
    #[error("graph6 header declares {n} vertices, maximum supported is 62")]
    TooLarge { n: usize },
    #[error("graph6 string too short: expected {expected} data bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("trailing data after {expected} data bytes")]
    TrailingData { expected: usize },
}

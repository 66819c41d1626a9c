use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("edge list parse error on line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("invalid graph family parameters: {0}")]
    InvalidSpec(String),
}

/// Raised when an explicit family would exceed its member cap.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("family enumeration exceeded cap of {cap} members ({found} found before stopping)")]
pub struct CapOverflow {
    pub cap: usize,
    pub found: usize,
}

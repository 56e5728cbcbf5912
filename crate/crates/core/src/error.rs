use thiserror::Error;

/// Errors raised by the hypertree toolkit.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("vertex {vertex} out of range for a hypergraph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("edge index {edge} out of range ({m} edges)")]
    InvalidEdge { edge: usize, m: usize },

    #[error("edge size mismatch: {left} vs {right}")]
    UniformityMismatch { left: usize, right: usize },

    #[error("order mismatch: {left} vs {right} vertices")]
    OrderMismatch { left: usize, right: usize },

    #[error("hypergraph contains a cycle")]
    NotAcyclic,

    #[error("hypergraph is not connected")]
    NotConnected,

    #[error("hypergraph is not a hypertree")]
    NotHypertree,

    #[error("empty edge family")]
    EmptyFamily,

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("zero vector is not a valid eigenvector candidate")]
    ZeroVector,

    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("infeasible parameters (m={m}, k={k}, r={r}): {reason}")]
    Infeasible {
        m: usize,
        k: usize,
        r: usize,
        reason: String,
    },

    #[error("power iteration did not converge after {iterations} iterations; bracket [{lower}, {upper}]")]
    NoConvergence {
        iterations: usize,
        lower: f64,
        upper: f64,
    },

    #[error("root bracketing failed: {0}")]
    Bracketing(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("operation would produce a non-linear hypergraph: {0}")]
    NonLinear(String),

    #[error("not majorized: {0}")]
    NotMajorized(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

use thiserror::Error;

/// Errors raised by graph construction, index evaluation and the searches.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected; unreachable vertices {unreachable:?}")]
    Disconnected { unreachable: Vec<usize> },
    #[error("graph is not a tree: {0}")]
    NotATree(String),
    #[error("graph has an isolated vertex {0}")]
    IsolatedVertex(usize),
    #[error("graph has no edges")]
    Edgeless,
    #[error("graph order must be at least {min}, got {order}")]
    OrderTooSmall { order: usize, min: usize },
    #[error("graph orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("edge {{{0}, {1}}} is a bridge")]
    BridgeEdge(usize, usize),
    #[error("edge {{{0}, {1}}} not present")]
    MissingEdge(usize, usize),
    #[error("invalid probability vector: {0}")]
    InvalidProbability(String),
    #[error("value is not finite")]
    NonFinite,
    #[error("sigma must be positive and finite")]
    InvalidSigma,
    #[error("logarithm base must be finite and greater than 1")]
    InvalidLogBase,
    #[error("degree-power exponent must be at least 1")]
    InvalidExponent,
    #[error("gap must be non-negative, got {0}")]
    NegativeGap(f64),
    #[error("invalid caterpillar: {0}")]
    InvalidCaterpillar(String),
    #[error("degree argument must be at least 1")]
    InvalidDegree,
    #[error("base trees have different Wiener indices ({0} vs {1})")]
    WienerMismatch(u64, u64),
    #[error("conjecture id must be 1, 2 or 3, got {0}")]
    UnknownConjecture(u8),
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("malformed canonical code")]
    MalformedCode,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

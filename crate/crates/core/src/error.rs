use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} is outside 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("opposite arcs between {0} and {1}")]
    OppositeArcs(usize, usize),
    #[error("not a tournament: vertices {0} and {1} are non-adjacent")]
    NotTournament(usize, usize),
    #[error("{what} needs at most {limit} vertices, got {n}")]
    TooLarge { what: &'static str, limit: usize, n: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown builtin graph `{0}`")]
    UnknownBuiltin(String),
    #[error("{q} is not a prime congruent to 3 mod 4 (and at most 61)")]
    BadPaleyOrder { q: usize },
    #[error("sign vector has length {signs} but vertex list has length {vertices}")]
    LengthMismatch { vertices: usize, signs: usize },
    #[error("repeated vertex {0} in vertex list")]
    RepeatedVertex(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("tournament enumeration is limited to 1..=7 (8 with the long flag), got {0}")]
    EnumerationRange(usize),
    #[error("no tournament of order <= {max_order} admits the requested homomorphism; exceeds enumeration range")]
    ExceedsEnumerationRange { max_order: usize },
    #[error("certificate error: {0}")]
    Certificate(String),
    #[error("configuration error: {0}")]
    Configuration(String),
    #[error("greedy extension is stuck at vertex {vertex}: every candidate image is blocked")]
    GreedyStuck { vertex: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("io error on {path}: {msg}")]
    Io { path: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

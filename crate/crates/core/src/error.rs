use thiserror::Error;

use crate::graph::{Side, Vertex};
use crate::verify::Violation;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("each side needs at least one vertex")]
    EmptySide,
    #[error("vertex {0} is out of range")]
    IndexOutOfRange(Vertex),
    #[error("duplicate edge (a{0}, b{1})")]
    DuplicateEdge(u32, u32),
    #[error("edge probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed header, expected `p bipartite <n1> <n2> <m>`")]
    MalformedHeader,
    #[error("missing `p bipartite` header")]
    MissingHeader,
    #[error("second header line")]
    DuplicateHeader,
    #[error("malformed edge line, expected `e <a-index> <b-index>`")]
    MalformedEdge,
    #[error("unknown record type `{0}`")]
    UnknownRecord(String),
    #[error("vertex {0} is out of range")]
    IndexOutOfRange(Vertex),
    #[error("same-side edge between {0} and {1}")]
    SameSideEdge(Vertex, Vertex),
    #[error("duplicate edge (a{0}, b{1})")]
    DuplicateEdge(u32, u32),
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("threshold must be positive, got {0}")]
    NonPositiveThreshold(i64),
    #[error("placement for side {side} has {found} entries, expected {expected}")]
    PlacementLength {
        side: Side,
        expected: usize,
        found: usize,
    },
    #[error("vertex sets differ: {left} vs {right} vertices")]
    VertexMismatch { left: usize, right: usize },
    #[error("intersection of an empty list of graphs")]
    EmptyIntersection,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationError {
    #[error("ranks do not form a bijection onto 1..={0}")]
    NotBijection(usize),
    #[error("vertex {0} is not on the permuted side")]
    OutsideSide(Vertex),
    #[error("projection onto an empty subset")]
    EmptySubset,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurvivalError {
    #[error("(a{0}, b{1}) is an edge, not a non-edge")]
    IsEdge(u32, u32),
    #[error("randunit permutes side {actual}, not side {requested}")]
    WrongBranch { requested: Side, actual: Side },
    #[error("side of size {0} is too large to enumerate (limit {1})")]
    TooLarge(usize, usize),
    #[error("vertex {0} is out of range")]
    IndexOutOfRange(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("t = 0 but {} cross non-edge(s) must be removed, first {}", .nonedges.len(), fmt_pair(.nonedges[0]))]
    ZeroDimensions { nonedges: Vec<(u32, u32)> },
    #[error("max_retries must be at least 1")]
    NoAttempts,
    #[error("verification failed after {attempts} attempt(s) with {} violation(s)", .violations.len())]
    RetriesExhausted {
        attempts: u32,
        violations: Vec<Violation>,
    },
    #[error(transparent)]
    Rep(#[from] RepError),
}

fn fmt_pair(p: (u32, u32)) -> String {
    format!("(a{}, b{})", p.0, p.1)
}

#[derive(Debug, Error)]
pub enum DumpError {
    #[error("malformed dump: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid dump: {0}")]
    Invalid(String),
    #[error(transparent)]
    Rep(#[from] RepError),
}

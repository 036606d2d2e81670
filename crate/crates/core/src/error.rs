use std::fmt;

/// Location-tagged failure from one of the text parsers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number.
    pub line: usize,
    /// 1-based column (in characters).
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid elements: {0}")]
    InvalidElements(String),
    #[error("the family of feasible sets is empty")]
    EmptyFamily,
    #[error("ground sets overlap on `{0}`")]
    GroundOverlap(String),
    #[error("expected {expected} labels, got {actual}")]
    InvalidArity { expected: usize, actual: usize },
    #[error("cannot delete `{0}`: it is a coloop")]
    CoLoopDeletion(String),
    #[error("not a delta-matroid")]
    NotADeltaMatroid,
    #[error("not a binary delta-matroid")]
    NotBinary,
    #[error("the empty set is not feasible")]
    EmptySetNotFeasible,
    #[error("matrix is not in block-diagonal canonical form (row {0})")]
    NotBlockDiagonal(usize),
    #[error("no [1] block available to absorb interlaced pairs")]
    NoOddBlock,
    #[error("no end of `{b}` is adjacent to rotation position {end}")]
    NonAdjacentEnds { end: usize, b: String },
    #[error("matrix is not symmetric at ({row}, {col})")]
    Asymmetric { row: usize, col: usize },
    #[error("object too large: {0}")]
    TooLarge(String),
    #[error("orbit exceeded the limit of {0} states")]
    LimitExceeded(usize),
    #[error("slide lifting mismatch: {0}")]
    LiftMismatch(String),
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
}

impl Error {
    /// True for malformed input rather than a failed mathematical precondition.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

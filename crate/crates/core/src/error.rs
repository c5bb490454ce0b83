use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("lambda must be nonzero")]
    ZeroLambda,

    #[error("element is the identity")]
    IdentityElement,

    #[error("depth {requested} exceeds cap {cap}")]
    DepthExceeded { requested: u32, cap: u32 },

    #[error("bad letter {letter:?} at position {position} (expected S, s, T or t)")]
    BadLetter { letter: char, position: usize },

    #[error("index {0} out of range")]
    BadIndex(i64),

    #[error("multiplier must be nonzero")]
    ZeroMultiplier,

    #[error("malformed program: {0}")]
    MalformedProgram(String),

    #[error("offset must be nonzero")]
    ZeroOffset,

    #[error("degenerate line: {0}")]
    DegenerateLine(String),

    #[error("sample count must be at least 2, got {0}")]
    BadSampleCount(usize),

    #[error("parameter not in the required region: {0}")]
    WrongRegion(String),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("empty range: {0}")]
    EmptyRange(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown name: {0}")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;

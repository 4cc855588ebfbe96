use thiserror::Error;

/// Errors raised by library operations and text-format parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("vertex `{label}` has degree {degree}, expected 4")]
    NotFourRegular { label: String, degree: usize },

    #[error("label `{label}` occurs {count} times in the double occurrence words, expected exactly twice in one word")]
    BadOccurrence { label: String, count: usize },

    #[error("invalid Euler system: {0}")]
    InvalidEulerSystem(String),

    #[error("empty double occurrence word")]
    EmptyWord,

    #[error(
        "{vertices} vertices exceeds the sweep cap of {cap} (would require {sweep} evaluations)"
    )]
    SweepTooLarge {
        vertices: usize,
        cap: usize,
        sweep: String,
    },

    #[error("transpositions overlap at element {0}")]
    OverlappingTranspositions(usize),

    #[error("invalid transposition ({0} {1})")]
    BadTransposition(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid pairing: {0}")]
    InvalidPairing(String),

    #[error("assignment does not cover vertex `{0}`")]
    IncompleteAssignment(String),

    #[error("variable `{0}` is unbound")]
    UnboundVariable(String),

    #[error("negative exponent in term for A={a:?}, B={b:?}")]
    NegativeExponent { a: Vec<String>, b: Vec<String> },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Format(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

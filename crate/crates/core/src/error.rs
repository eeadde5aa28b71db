use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator vector must not be empty")]
    EmptyVector,
    #[error("first element of a generator vector must be 0 (zero diagonal)")]
    NonZeroDiagonal,
    #[error("invalid bit {0:?}: expected 0 or 1")]
    InvalidBit(String),
    #[error("malformed connection set {0:?}: expected `n:a1,a2,...`")]
    MalformedConnectionSet(String),
    #[error("offset {offset} outside the canonical range (0, {bound}) for n = {n}")]
    OffsetOutOfRange {
        n: usize,
        offset: usize,
        bound: String,
    },
    #[error("offset {0} appears more than once")]
    DuplicateOffset(usize),
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("{0} is not congruent to 1 mod 4; its residue graph is not undirected")]
    NotOneModFour(usize),
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("n = {n} exceeds the enumeration limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid weight distribution: {0}")]
    InvalidDistribution(String),
    #[error("malformed weight enumerator {0:?}")]
    MalformedEnumerator(String),
    #[error("code already has minimum distance {d} >= target {target}")]
    AlreadyMeetsTarget { d: usize, target: usize },
    #[error("position {0} is the diagonal and is never scored or flipped")]
    DiagonalPosition(usize),
    #[error("position {0} holds 0")]
    ZeroElement(usize),
    #[error("no bounds for [{length},{dimension}]")]
    BoundsNotFound { length: usize, dimension: usize },
    #[error("bounds file, line {line}: {message}")]
    Bounds { line: u64, message: String },
}

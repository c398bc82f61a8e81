use thiserror::Error;

/// Errors produced by the tournament engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("tournament must have at least one alternative")]
    EmptyTournament,
    #[error("alternative {0} dominates itself")]
    ReflexiveEntry(usize),
    #[error("asymmetry violated: {0} and {1} dominate each other")]
    AsymmetryViolated(usize, usize),
    #[error("connexity violated: neither {0} nor {1} dominates the other")]
    ConnexityViolated(usize, usize),
    #[error("alternative {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("image is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("set must be nonempty")]
    EmptySet,
    #[error("input of size {size} exceeds the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("coordinate out of range: {0}")]
    InvalidCoordinate(String),
    #[error("orientation for triangle {0} is malformed")]
    MalformedOrientation(String),
    #[error("permutation {0} is not an automorphism of the tournament")]
    NotAnAutomorphism(usize),
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("invalid scan configuration: {0}")]
    InvalidConfig(String),
    #[error("internal solver error: {0}")]
    Solver(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

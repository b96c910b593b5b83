use thiserror::Error;

/// Errors across the library.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid permutation images: {0}")]
    InvalidImages(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("cannot parse cycle notation: {0}")]
    BadCycleText(String),
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("degree {0} exceeds the supported bound {1}")]
    DegreeTooLarge(usize, usize),
    #[error("braid index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("braid word token {position} out of range: {token}")]
    WordTokenOutOfRange { position: usize, token: String },
    #[error("malformed system: {0}")]
    MalformedSystem(String),
    #[error("guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("infeasible filter: {0}")]
    InfeasibleFilter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("monodromy group is not the full symmetric group")]
    MonodromyNotFull,
    #[error("no regime applies: {0}")]
    RegimeMismatch(String),
    #[error("certificate replay did not reproduce the claimed result: {0}")]
    ReplayFailed(String),
    #[error("target normal form not reachable: {0}")]
    TargetUnreachable(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

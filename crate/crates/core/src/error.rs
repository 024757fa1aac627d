use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("permutation domain must be nonempty")]
    EmptyDomain,
    #[error("not a bijection of 0..{degree}: {reason}")]
    NotABijection { degree: usize, reason: String },
    #[error("permutation degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("group order exceeds the limit {limit}")]
    OrderLimit { limit: usize },
    #[error("generator images do not define a homomorphism")]
    NotAHomomorphism,
    #[error("the two G-sets live over different groups")]
    GroupMismatch,
    #[error("subset size {k} out of range 1..={n}")]
    SubsetSizeOutOfRange { k: usize, n: usize },
    #[error("map is not equivariant at point {point}, element {element}")]
    NotEquivariant { point: usize, element: usize },
    #[error("covering map is not surjective onto the base")]
    NotSurjective,
    #[error("fibers have unequal sizes")]
    UnequalFibers,
    #[error("covering has degree {0}, expected 2")]
    NotDoubleCovering(usize),
    #[error("base of a covering must be nonempty")]
    EmptyBase,
    #[error("involution check failed: {0}")]
    BadInvolution(&'static str),
    #[error("base size {n} exceeds the Clifford set limit {limit}")]
    CliffordSizeLimit { n: usize, limit: usize },
    #[error("expected a G-set of size {expected}, got {got}")]
    WrongSize { expected: usize, got: usize },
    #[error("expected base size {expected}, got {got}")]
    WrongBaseSize { expected: usize, got: usize },
    #[error("covering is not orientable")]
    NotOrientable,
    #[error("orientation label must be 1 or 2")]
    BadOrientationLabel,
    #[error("the group must be trivial for the split algebra construction")]
    NontrivialGroup,
    #[error("tensor power base size {n} exceeds the materialization limit {limit}")]
    TensorSizeLimit { n: usize, limit: usize },
    #[error("fat diagonal idempotent requires tensor power equal to the base size ({m0} != {n})")]
    FatDiagonalShape { m0: usize, n: usize },
    #[error("element has dimension {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

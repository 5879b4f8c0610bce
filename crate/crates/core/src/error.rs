use thiserror::Error;

/// Errors raised by the data model, the decision procedures and the
/// constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid face {0:?}: vertices must be strictly increasing positive integers")]
    InvalidFace(Vec<u32>),

    #[error("invalid multiset {0:?}: elements must be weakly increasing positive integers")]
    InvalidMultiFace(Vec<u32>),

    #[error("vertex {vertex} lies outside the ground set [{n}]")]
    VertexOutOfRange { vertex: u32, n: u32 },

    #[error("gamma is not a subcomplex of delta: {0:?} is missing from delta")]
    NotSubcomplex(Vec<u32>),

    #[error("family is not closed under taking subsets: {0:?} is missing")]
    NotClosed(Vec<u32>),

    #[error("cardinality mismatch: {0} vs {1}")]
    CardinalityMismatch(usize, usize),

    #[error("requested {requested} faces of cardinality {k} but the ground set [{n}] only has {available}")]
    TooManyFaces {
        requested: usize,
        k: usize,
        n: u32,
        available: String,
    },

    #[error("vector is not proper: its leading entry must be 0")]
    NotProper,

    #[error("vector must start with 1 (a non-relative f-vector)")]
    ExpectedNonRelative,

    #[error("negative entry {value} at position {position}")]
    NegativeEntry { position: usize, value: String },

    #[error("value {0} is too large for an explicit construction")]
    TooLarge(String),

    #[error("infeasible vector: condition violated at dimension index {index}")]
    Infeasible { index: i64 },

    #[error("ground set size must be positive")]
    EmptyGroundSet,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),

    #[error("relative complex is not pure")]
    NotPure,

    #[error("invalid shelling order: {0}")]
    InvalidOrder(String),

    #[error("internal verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("truncation bounds differ: {left} vs {right}")]
    BoundMismatch { left: usize, right: usize },

    #[error("negative exponent after reciprocal substitution: {0}")]
    NegativeExponent(String),

    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,

    #[error("unsupported divisor: {0}")]
    UnsupportedDivisor(String),

    #[error("{what} has {size} elements, above the cap of {cap}")]
    OverCap { what: String, size: u128, cap: u64 },

    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("{perm} is not an element of type {family}")]
    NotInFamily { perm: String, family: String },

    #[error("zero is not an element of the signed order")]
    ZeroInOrder,

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("quadratic forms need an odd prime, got {0}")]
    EvenPrime(u32),

    #[error("invalid flag: {0}")]
    InvalidFlag(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

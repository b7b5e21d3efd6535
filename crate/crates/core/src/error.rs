use thiserror::Error;

/// Errors raised by the library.
///
/// Pure combinatorial functions never fail; everything here is either a
/// malformed input or a precondition that the caller is expected to check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<usize>),

    #[error("a multipartition needs level r >= 1")]
    ZeroLevel,

    #[error("size or level mismatch: ({n1}, r={r1}) vs ({n2}, r={r2})")]
    ShapeMismatch { n1: usize, r1: usize, n2: usize, r2: usize },

    #[error("index {index} out of range {lo}..={hi} for {what}")]
    OutOfRange { what: &'static str, index: usize, lo: usize, hi: usize },

    #[error("level composition {0:?} is required to end in 0")]
    LastEntryNonZero(Vec<usize>),

    #[error("operation requires level r >= {min}, got {r}")]
    LevelTooSmall { min: usize, r: usize },

    #[error("label {label} is not compatible with composition {m:?}")]
    IncompatibleLabel { label: String, m: Vec<usize> },

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("{0} is not a prime that fits in 32 bits")]
    NotPrime(u64),

    #[error("field mismatch: q={0} vs q={1}")]
    FieldMismatch(u64, u64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("entry {value} is not reduced modulo {q}")]
    EntryOutOfRange { value: u64, q: u64 },

    #[error("matrix is not unipotent")]
    NotUnipotent,

    #[error("subspace is not stable under the matrix")]
    NotStable,

    #[error("matrix is singular")]
    Singular,

    #[error("semi-standard coefficients rejected: {0}")]
    BadCoefficients(String),

    #[error("enumeration of {points} points exceeds the budget of {budget}")]
    BudgetExceeded { points: u128, budget: u128 },

    #[error("sample point {0} appears twice")]
    DuplicateSample(String),

    #[error("need at least {needed} samples at distinct points, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the group, class and center computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("images do not form a bijection of [{degree}]")]
    NotBijection { degree: usize },

    #[error("length {len} is not a multiple of block size {k}")]
    BadLength { len: usize, k: usize },

    #[error("block {block} is not sent onto a block")]
    NotBlockPreserving { block: usize },

    #[error("dimension mismatch: (k={k1}, n={n1}) vs (k={k2}, n={n2})")]
    DimensionMismatch {
        k1: usize,
        n1: usize,
        k2: usize,
        n2: usize,
    },

    #[error("partition {minuend} does not contain {subtrahend}")]
    NotSubtractable { minuend: String, subtrahend: String },

    #[error("cannot shrink from {from} blocks to {to}")]
    ShrinkNotAllowed { from: usize, to: usize },

    #[error("n={n} is smaller than the family size {size}")]
    TooSmall { n: usize, size: usize },

    #[error("work estimate {needed} exceeds the budget of {limit} element visits")]
    BudgetExceeded { needed: String, limit: u64 },

    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(i64),

    #[error("need at least {needed} sample points, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error("operation requires k={expected}, got k={got}")]
    WrongK { expected: usize, got: usize },

    #[error("family is not proper: x(1^k) contains a part equal to 1")]
    NotProper,

    #[error("invalid class type: {0}")]
    InvalidClassType(String),

    #[error("malformed value: {0}")]
    Malformed(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotBijection { .. } => "NotBijection",
            Error::BadLength { .. } => "BadLength",
            Error::NotBlockPreserving { .. } => "NotBlockPreserving",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotSubtractable { .. } => "NotSubtractable",
            Error::ShrinkNotAllowed { .. } => "ShrinkNotAllowed",
            Error::TooSmall { .. } => "TooSmall",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::DuplicateAbscissa(_) => "DuplicateAbscissa",
            Error::TooFewPoints { .. } => "TooFewPoints",
            Error::WrongK { .. } => "WrongK",
            Error::NotProper => "NotProper",
            Error::InvalidClassType(_) => "InvalidClassType",
            Error::Malformed(_) => "Malformed",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Everything that can go wrong in the numeric calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("binomial lower index {0} is below -1")]
    BinomialIndex(i64),

    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: i64 },

    #[error("{what} must be nonnegative, got {value}")]
    Negative { what: &'static str, value: i64 },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("non-character input: constant tail {tail}")]
    NonCharacter { tail: i64 },

    #[error("function is nonzero at {0} < 0")]
    NegativeSupport(i64),

    #[error("not an h-vector: negative value {value} at {n}")]
    NegativeHValue { n: i64, value: i64 },

    #[error("not a Macaulay function: {0}")]
    NotMacaulay(String),

    #[error("s0 is undefined for a function of type 0")]
    S0Undefined,

    #[error("decomposition needs type >= 2, got type {0}")]
    TypeTooSmall(i64),

    #[error("lex oracle scale bound exceeded: {0}")]
    OracleBound(String),

    #[error("s1 is undefined: no degree satisfies the bound")]
    S1Undefined,

    #[error("codimension must be at least {min}, got {got}")]
    Codimension { min: i64, got: i64 },

    #[error("necessary conditions fail: {0}")]
    NecessaryConditions(String),

    #[error("not a codim-3 ACM character: {0}")]
    NotCodim3Acm(String),

    #[error("non-integral {0}")]
    NonIntegral(&'static str),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("decomposition routes disagree: {0}")]
    RouteMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

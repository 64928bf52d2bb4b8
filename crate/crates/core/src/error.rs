use thiserror::Error;

/// Errors raised by the arithmetic and determinant routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    #[error("element is not a unit: {0}")]
    NotAUnit(String),
    #[error("reduced norm is not fixed by complex conjugation (arithmetic inconsistency)")]
    NotInRealSubfield,
    #[error("element is not in the maximal order")]
    NotInOrder,
    #[error("element is not a principal unit")]
    NotPrincipalUnit,
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("matrix is singular at working precision: {0}")]
    SingularAtPrecision(String),
    #[error("no unit pivot available")]
    NoUnitPivot,
    #[error("series has infinite reduced order at working precision")]
    InfiniteOrder,
    #[error("series is zero at working precision")]
    ZeroAtPrecision,
    #[error("reduced norm has non-integral coefficients")]
    NonIntegralNrd,
    #[error("negative uniformizer exponent {0} in integral representative")]
    NegativeExponent(i64),
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("determinant is nilpotent modulo p^2")]
    NilpotentDeterminant,
    #[error("precision too low to decide: {0}")]
    PrecisionTooLow(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

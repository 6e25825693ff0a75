use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient index {index} exceeds truncation order {order}")]
    CoeffOutOfRange { index: usize, order: usize },

    #[error("constant term is zero; the series has no multiplicative inverse")]
    NotInvertible,

    #[error("composition undefined: inner series has a nonzero constant term")]
    CompositionUndefined,

    #[error("reversion needs a series with valuation exactly 1")]
    ReversionUndefined,

    #[error("no rational square root: {0}")]
    NoRationalSqrt(&'static str),

    #[error("singular continued fraction: a convergent denominator lost its unit constant term")]
    SingularContinuedFraction,

    #[error("division undefined: denominator valuation {den} exceeds numerator valuation {num}")]
    DivisionUndefined { num: usize, den: usize },

    #[error("matrix dimension {dim} needs coefficients beyond truncation order {order}")]
    DimensionExceedsOrder { dim: usize, order: usize },

    #[error("zero diagonal entry at index {0}; the triangular matrix is singular")]
    SingularMatrix(usize),

    #[error("not a group element: {0}")]
    Membership(String),

    #[error("production matrix is not striped with period {period}: disagreement at row {row}, column {col}")]
    NotStriped { period: usize, row: usize, col: usize },

    #[error("recurrence mismatch at row {row}, column {col}")]
    RecurrenceMismatch { row: usize, col: usize },

    #[error("parse error at byte {at}: {msg}")]
    Parse { msg: String, at: usize },

    #[error("expression needs {needed} coefficients but only {available} stay exact after cancellation")]
    Precision { needed: usize, available: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("rational division by zero")]
    DivisionByZero,
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("degenerate: not a 1st degree equation")]
    NotLinear,
    #[error("not quadratic")]
    NotQuadratic,
    #[error("leading coefficient is zero: not a degree {0} equation")]
    ZeroLeading(usize),
    #[error("degenerate: 1 + coefficient is zero")]
    DegenerateFalsePosition,
    #[error("unique solvability requires a group")]
    NotAGroup,
    #[error("{what} of size {size} exceeds the bound {bound}")]
    TooLarge {
        what: &'static str,
        size: usize,
        bound: usize,
    },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("point {point} out of range 1..={n}")]
    PointOutOfRange { point: usize, n: usize },
    #[error("{0} is the square of a rational; no proper extension")]
    SquareParameter(String),
    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("polynomial has non-real coefficients")]
    ComplexCoefficients,
    #[error("expected {expected} roots, got {got}")]
    RootCount { expected: usize, got: usize },
    #[error("empty linear system")]
    EmptySystem,
    #[error("row {row} has {got} coefficients, expected {expected}")]
    RaggedSystem {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("addition and multiplication tables are over different element lists")]
    ElementMismatch,
    #[error("{0}")]
    Structure(String),
    #[error("modulus must be at least 2, got {0}")]
    Modulus(u64),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;

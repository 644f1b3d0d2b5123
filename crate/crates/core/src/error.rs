//! Error type shared by all engine operations.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two polynomials with different ambient variable counts were combined.
    VarMismatch { left: usize, right: usize },
    /// An operation that needs a nonzero polynomial received zero.
    ZeroPolynomial,
    /// A rational function was built with a zero denominator.
    ZeroDenominator,
    /// An operation that needs a non-constant input received a constant.
    ConstantInput,
    /// An operation over a list of inputs received an empty list.
    EmptyInput,
    /// Composition-unit inverse requested for a function of degree != 1.
    NotAUnit { degree: usize },
    /// gcd of two zero polynomials.
    BothZero,
    /// Dimension mismatch in a linear-algebra call.
    DimensionMismatch,
    /// An internal randomized engine exhausted its retry budget.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VarMismatch { left, right } => {
                write!(f, "variable-count mismatch: {left} vs {right}")
            }
            Error::ZeroPolynomial => write!(f, "zero polynomial"),
            Error::ZeroDenominator => write!(f, "zero denominator"),
            Error::ConstantInput => write!(f, "constant input"),
            Error::EmptyInput => write!(f, "empty input list"),
            Error::NotAUnit { degree } => {
                write!(f, "composition unit must have degree 1, got {degree}")
            }
            Error::BothZero => write!(f, "gcd of two zero polynomials"),
            Error::DimensionMismatch => write!(f, "matrix/vector dimension mismatch"),
            Error::Internal(msg) => write!(f, "internal engine failure: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::monomial::SquareFreeMonomial;

/// Errors raised while building or checking instances.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("monomials live in different rings (n = {left} vs n = {right})")]
    AmbientMismatch { left: usize, right: usize },

    #[error("variable index {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("variable index {index} repeated in a support")]
    DuplicateIndex { index: usize },

    #[error("number of variables must be in 1..={max}, got {n}")]
    VariableCount { n: usize, max: usize },

    #[error("generator {generator} of J is not contained in I")]
    NotContained { generator: String },

    #[error("I\\J contains no square-free monomial (J = I)")]
    EmptyQuotient,

    #[error("I is the unit ideal; quotients with d = 0 are not supported")]
    UnitIdeal,

    #[error("matrix dimension mismatch: {left_cols} columns against {right_rows} rows")]
    DimensionMismatch { left_cols: usize, right_rows: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("unknown field `{0}` (expected `q` or `gf:<p>`)")]
    UnknownField(String),

    #[error("rank over {field} exceeds rank over Q ({modular} > {rational})")]
    RankInconsistency {
        field: String,
        modular: usize,
        rational: usize,
    },

    #[error("negative homology dimension in chain degree {degree} at multidegree {multidegree}")]
    NegativeHomology { multidegree: String, degree: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{location}: {source}")]
    At {
        location: String,
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn not_contained(m: &SquareFreeMonomial) -> Self {
        Error::NotContained {
            generator: m.to_string(),
        }
    }
}

impl Error {
    pub fn at(self, location: impl Into<String>) -> Self {
        Error::At {
            location: location.into(),
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

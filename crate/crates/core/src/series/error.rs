use thiserror::Error;

use super::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series is not invertible: {0}")]
    NotInvertible(String),

    #[error("exact division leaves a fractional coefficient at q^{exp}")]
    NotDivisible { exp: i64 },

    #[error("({arg};q^{base})_{n} is undefined: the denominator has a vanishing factor")]
    UndefinedPochhammer { arg: Monomial, base: i64, n: i64 },

    #[error("({arg};q^{base}) contains the factor (1-1)")]
    ZeroFactor { arg: Monomial, base: i64 },

    #[error("comparison window [{lo}, {hi}) is empty")]
    EmptyWindow { lo: i64, hi: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal arithmetic error: {0}")]
    Internal(String),
}

use num_rational::BigRational;
use thiserror::Error;

use crate::rational::Exponent;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("coefficient at q^{exponent} requested but series is only known below q^{truncation}")]
    BeyondTruncation {
        exponent: Exponent,
        truncation: Exponent,
    },

    #[error("series is zero up to its truncation and cannot be inverted")]
    NotInvertible,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("lattice condition has infinitely many solutions (degenerate Gram matrix)")]
    DegenerateLattice,

    #[error("linear system is rank deficient: rank {rank}, need {needed}")]
    RankDeficient { rank: usize, needed: usize },

    #[error("linear system is inconsistent (equation {row} is violated)")]
    Inconsistent { row: usize },

    #[error("expected an integer, got {value} ({context})")]
    NonIntegral { value: Box<BigRational>, context: String },

    #[error("mirror potential has a surviving log term t1^{a} t2^{b} at (d1, d2) = ({d1}, {d2})")]
    LogCancellation { a: usize, b: usize, d1: usize, d2: usize },

    #[error("missing NL entry for (h, d) = ({h}, {d})")]
    MissingEntry { h: i64, d: i64 },

    #[error("discriminant {disc} is not positive")]
    NonPositiveDiscriminant { disc: i64 },

    #[error("value {value} is not within {tolerance:e} of an integer")]
    NotNearInteger { value: f64, tolerance: f64 },

    #[error("KKV basis conversion left a remainder at q^{h}")]
    BasisRemainder { h: usize },
}

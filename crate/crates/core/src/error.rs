use thiserror::Error;

use crate::algebra::Scalar;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("inadmissible weight system {weights:?}: {reason}")]
    InadmissibleWeights { weights: [i64; 4], reason: String },

    #[error("degree {got} out of range (need at least {min})")]
    DegreeOutOfRange { got: i64, min: i64 },

    #[error("elementary symmetric index {k} exceeds multiset size {size}")]
    SymmetricIndex { k: usize, size: usize },

    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(i64),

    #[error("interpolation needs at least {needed} points, got {got}")]
    InsufficientPoints { needed: usize, got: usize },

    #[error("terms of mixed polynomial degree ({first} and {other})")]
    MixedDegrees { first: u32, other: u32 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("zero form")]
    ZeroForm,

    #[error("invalid pair {{{0},{1}}}: need 1 <= i < j <= 4")]
    InvalidPair(u8, u8),

    #[error("limit fiber at {{{i},{j}}}, d={d}: rank {got} after saturation, expected {expected}")]
    RankDeficient {
        i: u8,
        j: u8,
        d: u32,
        got: usize,
        expected: usize,
    },

    #[error("fiber methods disagree at {{{i},{j}}}, d={d}: image {image:?} vs kernel {kernel:?}")]
    MethodMismatch {
        i: u8,
        j: u8,
        d: u32,
        image: Box<[i64]>,
        kernel: Box<[i64]>,
    },

    #[error("Bott sum is not an integer: {0}")]
    NonIntegral(Box<Scalar>),

    #[error("closed-form mismatch at d={d}: computed {computed}, expected {expected}")]
    OracleMismatch {
        d: i64,
        computed: Box<Scalar>,
        expected: Box<Scalar>,
    },

    #[error("interpolated polynomial takes non-integral value {value} at d={d}")]
    NonIntegralInterpolant { d: i64, value: Box<Scalar> },

    #[error("parse error: {0}")]
    Parse(String),
}

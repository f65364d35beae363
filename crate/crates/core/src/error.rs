use thiserror::Error;

use crate::poly::Frame;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("exponent triple {exp:?} is not a monomial of degree {degree}")]
    BadExponent { exp: (i64, i64, i64), degree: u32 },

    #[error("monomial index {index} out of range for degree {degree} (size {size})")]
    IndexOutOfRange { index: usize, degree: u32, size: usize },

    #[error("frame mismatch: expected {expected:?}, found {found:?}")]
    FrameMismatch { expected: Frame, found: Frame },

    #[error("polynomial has a non-integer coefficient")]
    NonInteger,

    #[error("zero polynomial has no primitive normalization")]
    ZeroPolynomial,

    #[error("quaternion coordinates {0:?} violate the Hurwitz parity condition")]
    Parity([i64; 4]),

    #[error("zero quaternion has no rotation")]
    ZeroQuaternion,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("polynomial is not invariant under the unit group")]
    NotInvariant,

    #[error("image of the Hecke operator falls outside the span of the basis")]
    OutsideSpan,

    #[error("operator parameter out of range: {0}")]
    BadParameter(String),

    #[error("polynomial is not in the kernel of the weighted Laplacian")]
    NotHarmonic,

    #[error("not divisible by the factor {0}")]
    NotDivisible(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("integer overflow in fixed-width fast path")]
    Overflow,

    #[error("search exhausted: {0}")]
    NotFound(String),
}

pub type Result<T> = std::result::Result<T, Error>;

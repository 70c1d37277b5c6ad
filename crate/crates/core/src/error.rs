use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failures surfaced by the coordinate, profile, range, and intersection APIs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("puncture count must be at least 2, got {0}")]
    InvalidSurface(usize),

    #[error("the zero vector does not encode a multicurve")]
    ZeroVector,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("parity violation: {0}")]
    ParityViolation(String),

    #[error("inconsistent triangle coordinates: {0}")]
    InconsistentTriangle(String),

    /// The inversion formulas leave the integers for this vector.
    #[error("coordinates are not realizable by a multicurve: {0}")]
    Unrealizable(String),

    #[error("endpoint mismatch on beta_{arc}: {left} from the left, {right} from the right")]
    EndpointMismatch { arc: usize, left: i64, right: i64 },

    #[error("invalid region range: {0}")]
    Range(String),

    #[error("invalid elementary curve: {0}")]
    Parameter(String),

    #[error("no intersection formula for curve {0}")]
    UnsupportedCurve(String),

    #[error("negative c coordinates (non-primitive components) are not supported here")]
    NonprimitiveContent,

    #[error("integer overflow")]
    Overflow,

    #[error("strand diagram is not embedded: {0}")]
    NotEmbedded(String),
}

impl Error {
    /// Stable numeric code, shared with the C interface.
    pub fn code(&self) -> i32 {
        match self {
            Error::InvalidSurface(_) => 1,
            Error::ZeroVector => 2,
            Error::DimensionMismatch(_) => 3,
            Error::Syntax { .. } => 4,
            Error::ParityViolation(_) => 5,
            Error::InconsistentTriangle(_) => 6,
            Error::Unrealizable(_) => 7,
            Error::EndpointMismatch { .. } => 8,
            Error::Range(_) => 9,
            Error::Parameter(_) => 10,
            Error::UnsupportedCurve(_) => 11,
            Error::NonprimitiveContent => 12,
            Error::Overflow => 13,
            Error::NotEmbedded(_) => 14,
        }
    }
}

/// Checked integer helpers; every arithmetic step on coordinates goes through these.
pub(crate) mod ck {
    use super::{Error, Result};

    pub fn add(a: i64, b: i64) -> Result<i64> {
        a.checked_add(b).ok_or(Error::Overflow)
    }

    pub fn sub(a: i64, b: i64) -> Result<i64> {
        a.checked_sub(b).ok_or(Error::Overflow)
    }

    pub fn mul(a: i64, b: i64) -> Result<i64> {
        a.checked_mul(b).ok_or(Error::Overflow)
    }

    pub fn abs(a: i64) -> Result<i64> {
        a.checked_abs().ok_or(Error::Overflow)
    }

    pub fn neg(a: i64) -> Result<i64> {
        a.checked_neg().ok_or(Error::Overflow)
    }
}

use thiserror::Error;

use crate::geom::Frame;

/// Errors raised by the geometry primitives, metrics, solvers and file formats.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coordinate or parameter is not finite")]
    NonFinite,
    #[error("point set is empty")]
    EmptySet,
    #[error("operation needs at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("{what} accepts at most {max} points, got {got}")]
    TooManyPoints {
        what: &'static str,
        max: usize,
        got: usize,
    },
    #[error("speed must exceed 1, got {0}")]
    InvalidSpeed(f64),
    #[error("highway length must be positive, got {0}")]
    InvalidLength(f64),
    #[error("radius must be non-negative, got {0}")]
    NegativeRadius(f64),
    #[error("rectangle is empty")]
    EmptyRect,
    #[error("mixed frames: expected {expected:?}, got {got:?}")]
    FrameMismatch { expected: Frame, got: Frame },
    #[error("facility is not on the highway (off by {0})")]
    NotOnHighway(f64),
    #[error("orientation {0} is outside the normalized band [0, pi/4]")]
    AngleOutOfRange(f64),
    #[error("invalid orientation interval [{lo}, {hi}]")]
    BadInterval { lo: f64, hi: f64 },
    #[error("highway kind does not match: {0}")]
    KindMismatch(String),
    #[error("degenerate highway: {0}")]
    DegenerateHighway(String),
    #[error("sample count must be at least 2, got {0}")]
    TooFewSamples(usize),
    #[error("unknown point family `{0}`")]
    UnknownFamily(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_speed(v: f64) -> Result<()> {
    if !v.is_finite() {
        return Err(Error::NonFinite);
    }
    if v <= 1.0 {
        return Err(Error::InvalidSpeed(v));
    }
    Ok(())
}

pub(crate) fn check_length(ell: f64) -> Result<()> {
    if !ell.is_finite() {
        return Err(Error::NonFinite);
    }
    if ell <= 0.0 {
        return Err(Error::InvalidLength(ell));
    }
    Ok(())
}

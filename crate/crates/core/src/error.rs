use thiserror::Error;

/// Errors raised when constructing or transforming combinatorial objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("entry at position {position} is zero")]
    ZeroEntry { position: usize },

    #[error("magnitude {magnitude} occurs more than once")]
    DuplicateMagnitude { magnitude: u32 },

    #[error("magnitudes do not form a permutation of 1..={len}: {magnitude} is out of range")]
    MagnitudeOutOfRange { magnitude: u32, len: usize },

    #[error("not a snake: condition fails at position {position}")]
    NotASnake { position: usize },

    #[error("path goes below the x-axis at step {step}")]
    BelowAxis { step: usize },

    #[error("label {label} at step {step} exceeds the step height {height}")]
    LabelOutOfRange {
        step: usize,
        label: u32,
        height: u32,
    },

    #[error("{labels} labels given for a path of {steps} steps")]
    LengthMismatch { steps: usize, labels: usize },

    #[error("not a Dyck path: {0}")]
    NotDyck(&'static str),

    #[error("invalid level code at position {position}")]
    InvalidLevelCode { position: usize },

    #[error("step index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("weighted path touches height {height} at point {point} before its last point")]
    WeightedPathTouchesAxis { point: usize, height: i64 },

    #[error("enumeration of size {n} exceeds the cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("constant term is not invertible")]
    NotInvertible,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

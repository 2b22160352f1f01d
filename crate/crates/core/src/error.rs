use thiserror::Error;

/// Errors produced by the engine.
///
/// Everything here is an input/validation problem except
/// [`Error::NonIntegralSignature`], which signals that the requested
/// `(M, A, d)` triple cannot arise from an actual cyclic branched cover.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} has length {found}, expected {expected}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("gram matrix row {row} has {found} entries, expected {expected}")]
    NonSquareGram {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("gram matrix is not symmetric at ({row}, {col})")]
    NonSymmetricGram { row: usize, col: usize },

    #[error("gram matrix is degenerate (zero determinant)")]
    DegenerateForm,

    #[error("canonical class K is not characteristic for the intersection form")]
    NonCharacteristicCanonical,

    #[error("spin flag is set but the intersection form is odd")]
    SpinOddForm,

    #[error("omega entry {index} ({text:?}) is not a rational of the form \"p/q\"")]
    InvalidRational { index: usize, text: String },

    #[error("covering degree d = {d} is invalid, need d >= {min}")]
    InvalidDegree { d: i64, min: i64 },

    #[error("class must be nonzero")]
    ZeroClass,

    #[error("search support is empty, need at least one basis index")]
    EmptySupport,

    #[error("basis index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("search bound R = {bound} is invalid, need R >= 1")]
    InvalidBound { bound: i64 },

    #[error(
        "branched-cover signature is not an integer: d*(3*sigma - (d^2-1)*A^2) = {numerator} \
         is not divisible by 3 (no degree-{d} cyclic branched cover realizes these data)"
    )]
    NonIntegralSignature { d: i64, numerator: i64 },

    #[error("integer overflow in {context}")]
    Overflow { context: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Structured error classes. Each carries a stable process exit code so the
/// CLI can report failures distinctly and deterministically.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator: factor (1 - 1) appears in the denominator{0}")]
    ZeroDenominator(String),
    #[error("series not expandable: denominator factor {0} has non-positive weight degree")]
    NotExpandable(String),
    #[error("uncancelled pole at tableau {tableau}: denominator factor {factor}")]
    UncancelledPole { tableau: String, factor: String },
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("box ({0},{1}) lies outside the diagram")]
    BoxOutsideDiagram(i64, i64),
    #[error("strand mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("non-generic parameter: {0}")]
    NonGenericParameter(String),
    #[error("not a knot: k = {0} is divisible by 3")]
    NotAKnot(i64),
    #[error("ratio is not a single monomial: {0}")]
    NotMonomialRatio(String),
    #[error("kernel not expandable: {0}")]
    KernelNotExpandable(String),
    #[error("unsupported strand count n = {0}")]
    UnsupportedN(usize),
    #[error("cutoff too small: no multidegree fits below {0}")]
    CutoffTooSmall(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable nonzero exit code per error class (usage errors use 2).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::UncancelledPole { .. } => 3,
            Error::UnsupportedShape(_) => 4,
            Error::NotExpandable(_) => 5,
            Error::ZeroDenominator(_) => 6,
            Error::NotAKnot(_) => 7,
            Error::NotMonomialRatio(_) => 8,
            Error::StrandMismatch(_, _) => 9,
            Error::UnsupportedN(_) => 10,
            Error::KernelNotExpandable(_) => 11,
            Error::CutoffTooSmall(_) => 12,
            Error::NonGenericParameter(_) => 13,
            Error::BoxOutsideDiagram(_, _) => 14,
            Error::Parse(_) => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

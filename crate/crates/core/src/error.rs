use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid (p,q) context: p + q = {expected} but the weight has {actual} entries")]
    InvalidContext { expected: usize, actual: usize },

    #[error("invalid (p,q) context: p and q must both be positive (got p = {p}, q = {q})")]
    NonPositiveSignature { p: usize, q: usize },

    #[error("weight is not (p,q)-dominant: entries {i} and {j} (1-indexed) must differ by a positive integer")]
    NotPqDominant { i: usize, j: usize },

    #[error("weight is not integral: entries {i} and {j} (1-indexed) differ by a non-integer")]
    NotIntegral { i: usize, j: usize },

    #[error("first and last entries of the weight must coincide (got {first} and {last})")]
    NotOrthogonalToMaximalRoot { first: String, last: String },

    #[error("z = {z} lies outside the unitary interval (z <= {threshold_real}, or integral z <= {threshold_int})")]
    NotUnitary {
        z: String,
        threshold_real: String,
        threshold_int: i64,
    },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("shape has {boxes} boxes but n = {n}")]
    ShapeSize { boxes: usize, n: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid ball signature: {0}")]
    InvalidSignature(String),

    #[error(
        "ball counts differ: ({white1} white, {black1} black) vs ({white2} white, {black2} black)"
    )]
    BallCountMismatch {
        white1: usize,
        black1: usize,
        white2: usize,
        black2: usize,
    },

    #[error("rank {n} exceeds the Hecke oracle bound {bound}")]
    RankBound { n: usize, bound: usize },

    #[error("invalid range: {from} > {to}")]
    InvalidRange { from: i64, to: i64 },

    #[error("independent computations of {what} disagree: {left} vs {right}")]
    Disagreement {
        what: &'static str,
        left: String,
        right: String,
    },
}

impl Error {
    /// Stable machine-readable tag for the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::InvalidContext { .. } => "invalid_context",
            Error::NonPositiveSignature { .. } => "invalid_context",
            Error::NotPqDominant { .. } => "not_pq_dominant",
            Error::NotIntegral { .. } => "not_integral",
            Error::NotOrthogonalToMaximalRoot { .. } => "first_last_mismatch",
            Error::NotUnitary { .. } => "not_unitary",
            Error::SizeMismatch { .. } => "size_mismatch",
            Error::ShapeSize { .. } => "shape_size",
            Error::InvalidPermutation(_) => "invalid_permutation",
            Error::InvalidSignature(_) => "invalid_signature",
            Error::BallCountMismatch { .. } => "ball_count_mismatch",
            Error::RankBound { .. } => "rank_bound",
            Error::InvalidRange { .. } => "invalid_range",
            Error::Disagreement { .. } => "disagreement",
        }
    }

    /// 1-indexed positions the error refers to, if any.
    pub fn indices(&self) -> Vec<usize> {
        match self {
            Error::NotPqDominant { i, j } | Error::NotIntegral { i, j } => vec![*i, *j],
            _ => Vec::new(),
        }
    }
}

use crate::perm::Permutation;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("permutation size must be at least 1")]
    ZeroSize,

    #[error("invalid permutation `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("positions ({i}, {j}) are not valid for a transposition in S_{n}")]
    PositionOutOfRange { i: usize, j: usize, n: usize },

    #[error("simple reflection index {index} is out of range for S_{n}")]
    InvalidReflection { index: usize, n: usize },

    #[error("size mismatch: S_{left} vs S_{right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("pattern of size {pattern} is longer than the permutation of size {text}")]
    PatternTooLong { pattern: usize, text: usize },

    #[error("{0} contains the pattern 132")]
    Non132Avoiding(Permutation),

    #[error("interval exceeds the configured bound of {bound} elements")]
    IntervalTooLarge { bound: usize },

    #[error("{sigma} -> {sigma}·t({i},{j}) is not a strong order cover")]
    NotStrongCover { sigma: Permutation, i: usize, j: usize },

    #[error("{sigma} is not in the weak order interval below {pi}")]
    NotInInterval { sigma: Permutation, pi: Permutation },

    #[error("{sigma} is not below {pi} in the right weak order")]
    NotBelowPi { sigma: Permutation, pi: Permutation },

    #[error("monomial exponent {alpha:?} of S_{sigma} is not bounded by {beta:?}")]
    PaddingViolation {
        sigma: Permutation,
        alpha: Vec<u32>,
        beta: Vec<u32>,
    },

    #[error("{numerator} is not divisible by {denominator}")]
    InexactDivision {
        numerator: String,
        denominator: String,
    },

    #[error("operator dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("rank {upper} has {upper_size} elements but rank {lower} has {lower_size}")]
    RankSizeMismatch {
        upper: usize,
        upper_size: usize,
        lower: usize,
        lower_size: usize,
    },

    #[error("rank index {index} exceeds half the interval length {length}")]
    RankIndexOutOfRange { index: usize, length: usize },

    #[error("brute force limited to {limit} elements, interval has {size}")]
    TooLargeForBruteForce { size: usize, limit: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("diamond for ({sigma}, {tau}) has an upper completion but no lower one, or vice versa")]
    DiamondMismatch { sigma: Permutation, tau: Permutation },
}

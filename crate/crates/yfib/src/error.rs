use crate::word::Word;

/// Errors surfaced by the library. Everything here is a caller-input
/// problem; internal arithmetic is exact and total.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid word: {0}")]
    InvalidWord(String),

    /// Coefficient families and boundary polynomials are undefined off the
    /// order relation.
    #[error("{w} is not below {v} in the lattice order")]
    Incomparable { w: Word, v: Word },

    #[error("invalid measure parameters: {0}")]
    InvalidParams(String),

    /// The word lies outside the bounded-twos subgraph the measure lives on.
    #[error("word {word} has {twos} twos, exceeding the bound K = {k}")]
    TooManyTwos { word: Word, twos: usize, k: usize },

    /// The sampler could not accumulate enough conditional mass below the
    /// configured candidate-length cap.
    #[error(
        "truncated transition mass {reached} at length cap {cap} is below the target 1 - {tol}"
    )]
    Truncation { reached: String, tol: String, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the plactic toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse word {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("letter 0 is not allowed; letters are positive integers")]
    ZeroLetter,

    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("input length {len} exceeds the exhaustive-search limit {limit}")]
    LengthLimit { len: usize, limit: usize },

    #[error("resource guard tripped: {what} would enumerate more than {limit} objects")]
    GuardExceeded { what: String, limit: u64 },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid skew configuration: {0}")]
    InvalidSkew(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("alphabet violation: {0}")]
    Alphabet(String),

    #[error("{0} is not a permutation")]
    NotPermutation(String),

    #[error("word {word} uses a single letter; use the single-letter characterization of C(a^n)")]
    SingleLetterCase { word: String },

    #[error("parameter out of range: {0}")]
    Range(String),

    #[error("values are inconsistent with degree bound {degree}: coefficient {index} is {value}")]
    Inconsistent { degree: usize, index: usize, value: String },

    #[error("cache i/o: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("interval too wide to certify a unique rational with the requested denominator bound")]
    AmbiguousInterval,

    #[error("no rational with bounded denominator lies in the interval")]
    NoRationalInInterval,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("duplicate field label `{0}`")]
    DuplicateLabel(String),

    #[error("field {label}: splitting of p = {prime} is not certified and no override is given")]
    UncertifiedPrime { label: String, prime: u64 },

    #[error("{0} is not the fundamental discriminant of a real quadratic field")]
    NotFundamental(BigInt),

    #[error("character is odd; only even characters have nonzero values at negative odd integers")]
    OddCharacter,

    #[error("rational reconstruction failed after exhausting the precision ladder: {0}")]
    ReconstructionFailed(String),

    #[error("illegal parahoric type: {0}")]
    IllegalType(String),

    #[error("parity condition violated: rank {rank}, degree {degree}, {nonsplit} nonsplit places")]
    ParityViolation {
        rank: u32,
        degree: u32,
        nonsplit: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("exact and enclosure evaluations disagree: {0}")]
    InconsistentModes(String),

    #[error("no admissible local configuration: {0}")]
    NoAdmissibleConfiguration(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid character {ch:?} at position {position} for the {alphabet} alphabet")]
    InvalidCharacter {
        ch: char,
        position: usize,
        alphabet: &'static str,
    },
    #[error("prefix condition violated at position {position}")]
    PrefixViolation { position: usize },
    #[error("unbalanced word: {0}")]
    UnbalancedWord(String),
    #[error("ballot precondition violated: {0}")]
    BallotPreconditionViolated(String),
    #[error("{name} = {value} is outside {low}..={high}")]
    IndexOutOfRange {
        name: &'static str,
        value: usize,
        low: usize,
        high: usize,
    },
    #[error("expected {expected} star(s), found {found}")]
    WrongStarCount { expected: usize, found: usize },
    #[error("{0} is not a prime number >= 3")]
    NotPrime(u64),
    #[error("{what} = {requested} exceeds the oracle bound {bound}")]
    OracleBoundExceeded {
        what: &'static str,
        requested: usize,
        bound: usize,
    },
    #[error("input is outside the domain of the map: {0}")]
    DomainViolation(String),
    #[error("operation requires semilength n >= 1")]
    EmptyPath,
    #[error("derivative of an order-0 series has no known coefficients")]
    TruncationUnderflow,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

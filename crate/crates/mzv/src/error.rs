use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text input did not match the expected grammar.  `offset` is a byte
    /// offset into the input string.
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// An operation was applied outside its domain (e.g. a word that must
    /// end in y, or a non-admissible argument to ζ).
    #[error("domain error: {0}")]
    Domain(String),

    /// A modulus that was required to be prime is not.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// A coefficient denominator is divisible by the working prime.
    #[error("denominator of {coeff} is divisible by {p}")]
    DenominatorDivisible { coeff: String, p: u64 },

    /// A quasi-symmetric expression was expected to be symmetric but is not;
    /// the two monomials are a witness pair with unequal coefficients.
    #[error("not a symmetric function: coefficients of {0} and {1} differ")]
    NotSymmetric(String, String),

    /// A generator handed to the exponential-series operator does not raise
    /// weight by its declared degree.
    #[error("generator {index} does not raise weight by {expected}")]
    NotWeightRaising { index: usize, expected: usize },
}

impl Error {
    pub fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    pub fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }
}

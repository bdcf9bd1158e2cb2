use thiserror::Error;

/// Errors raised by the library.
///
/// Argument errors describe invalid input. Consistency errors mean two
/// routes that must agree did not, or an exact computation produced a value
/// outside its proven domain; they indicate a bug, not bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("{what} = {value} is out of range ({expected})")]
    OutOfRange {
        what: &'static str,
        value: i128,
        expected: String,
    },

    #[error("size {size} is not of the form {form} for p = {p}")]
    BadSize {
        size: usize,
        p: u64,
        form: &'static str,
    },

    #[error("partition ({0}, {1}) does not label a simple module for p = {2}")]
    NotALabel(u64, u64, u64),

    #[error("series coefficient {index} is not an integer: {value}")]
    NonIntegerCoefficient { index: usize, value: String },

    #[error("series has negative valuation {0}")]
    NegativeValuation(i64),

    #[error("division by a series with zero constant term")]
    ZeroConstantTerm,

    #[error("high-precision rounding residual {residual} is not below {limit} at {bits} bits")]
    PrecisionFailure {
        residual: String,
        limit: &'static str,
        bits: usize,
    },

    #[error("consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn out_of_range(what: &'static str, value: impl Into<i128>, expected: impl Into<String>) -> Self {
        Error::OutOfRange {
            what,
            value: value.into(),
            expected: expected.into(),
        }
    }

    /// True for errors signalling an internal inconsistency rather than bad input.
    pub fn is_consistency_failure(&self) -> bool {
        matches!(
            self,
            Error::NonIntegerCoefficient { .. }
                | Error::NegativeValuation(_)
                | Error::ZeroConstantTerm
                | Error::PrecisionFailure { .. }
                | Error::Inconsistent(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

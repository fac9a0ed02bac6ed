use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// Root counting was requested for the zero polynomial.
    #[error("indeterminate root count: zero polynomial")]
    ZeroPolynomial,

    /// A coefficient table of the wrong kind was supplied.
    #[error("coefficient table kind mismatch: expected {expected}, got {got}")]
    KindMismatch {
        expected: &'static str,
        got: &'static str,
    },

    /// A coefficient table is too short for the requested operation.
    #[error("coefficient table too short: need {need} entries, have {have}")]
    TableTooShort { need: usize, have: usize },

    /// Quadrature failed to reach the requested tolerance within budget.
    #[error("quadrature did not converge: error estimate {estimate:e} > tolerance {tolerance:e}")]
    NonConvergence { estimate: f64, tolerance: f64 },

    /// A coefficient of the common-denominator numerator that must vanish
    /// did not; indicates corrupted coefficient tables.
    #[error("cancellation failure at m={m}: degree {degree} coefficient {coeff} != 0")]
    CancellationFailure {
        m: usize,
        degree: usize,
        coeff: String,
    },

    /// Invalid precision configuration.
    #[error("invalid precision: {0}")]
    Precision(String),

    /// A test sequence with no positive entry was supplied.
    #[error("sequence has no positive entry")]
    SequenceAllZero,

    /// A sequence entry is negative or not finite.
    #[error("invalid sequence entry at position {index}: {value}")]
    InvalidSequenceEntry { index: usize, value: f64 },

    /// Failure parsing numeric input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

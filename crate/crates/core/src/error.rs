use thiserror::Error;

/// Errors raised by the library. Identity checks that evaluate cleanly but
/// disagree are *not* errors; they come back as a report with `pass = false`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence too short: entry x_{needed} requested but only {available} available")]
    SequenceTooShort { needed: usize, available: usize },

    #[error("index vector must have at least one positive entry")]
    ZeroVector,

    #[error("argument out of range: {0}")]
    Range(String),

    #[error("polynomial degree {degree} is not below the bound {bound}")]
    DegreeBound { degree: u32, bound: usize },

    #[error("denominator vanishes at {site}")]
    Pole { site: String },

    #[error("prefactor denominator a*n + b vanishes at n = {n}")]
    ZeroDenominator { n: usize },

    #[error("transform parameters a and b must not both be zero")]
    DegenerateParams,

    #[error("series must have constant term 1")]
    ConstantTerm,

    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use num_bigint::BigInt;
use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: BigInt, b: BigInt },

    #[error("moduli are not pairwise coprime")]
    ModuliNotCoprime,

    #[error("{0} is not prime")]
    NotPrime(BigInt),

    #[error("{value} exceeds the configured bound {bound}")]
    BoundExceeded { value: BigInt, bound: BigInt },

    #[error("modulus must be >= 1, got {0}")]
    InvalidModulus(BigInt),

    #[error("arguments are congruent mod the modulus")]
    CongruentArguments,

    #[error("condition (c - d)(cd - 1) = 0 mod b fails; equality is impossible")]
    Condition2Violated,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("{{c, d}} is not a suitable set for b")]
    NotSuitable,

    #[error("{0} is not square-free")]
    NotSquareFree(BigInt),

    #[error("{0} is not congruent to +-1 mod 5")]
    NotPlusMinusOneMod5(BigInt),

    #[error("tail prime {p} is not congruent to 1 mod {b0}")]
    TailNotOneModB0 { p: BigInt, b0: BigInt },

    #[error("duplicate prime {0}")]
    DuplicatePrime(BigInt),

    #[error("requested {requested} steps exceeds the step limit {limit}")]
    StepLimitExceeded { requested: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

//! Exact computation of Dedekind sums and of equal-value structure
//! among sums sharing a modulus.
//!
//! The crate provides:
//! - [`arith`]: big-integer number theory (gcd, modular inverse, CRT,
//!   modular square roots, primality, square-free factoring);
//! - [`sums`]: the sawtooth function and two exact evaluators for the
//!   classical and normalized Dedekind sums;
//! - [`equality`]: the necessary congruence condition, the three-term
//!   relation, and the single-sum criterion deciding `S(c,b) = S(d,b)`;
//! - [`suitable`]: suitable sets and the recursion generating infinite
//!   sequences of pairwise equal sums;
//! - [`construct`]: 2^k-member equal-value families assembled by the
//!   Chinese remainder theorem;
//! - [`census`]: exhaustive per-modulus equality censuses and searches.
//!
//! All arithmetic is exact; there is no floating point anywhere in the
//! computational path.

pub mod arith;
pub mod census;
pub mod construct;
pub mod equality;
pub mod error;
pub mod render;
pub mod sums;
pub mod suitable;

pub use error::{Error, Result};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

//! Exact evaluation of the sawtooth function and of Dedekind sums.
//!
//! Two evaluators are provided: [`s_naive`] computes the defining sum
//! term by term and serves as the ground-truth oracle; [`s_fast`] runs a
//! Euclidean descent driven by the reciprocity identity and finishes in
//! as many steps as the Euclidean algorithm for `(c, b)`.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::gcd;
use crate::error::{Error, Result};

/// Largest modulus the naive oracle will sum over.
pub const NAIVE_BOUND: u64 = 10_000_000;

/// A coprime (argument, modulus) pair with the argument canonical in
/// `[0, b - 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArgPair {
    modulus: BigInt,
    argument: BigInt,
}

impl ArgPair {
    pub fn new(argument: BigInt, modulus: BigInt) -> Result<Self> {
        if modulus < BigInt::one() {
            return Err(Error::InvalidModulus(modulus));
        }
        let argument = argument.mod_floor(&modulus);
        if !gcd(&argument, &modulus).is_one() && !modulus.is_one() {
            return Err(Error::NotCoprime {
                a: argument,
                b: modulus,
            });
        }
        Ok(Self { modulus, argument })
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn argument(&self) -> &BigInt {
        &self.argument
    }
}

/// The sawtooth function: `x - floor(x) - 1/2` for non-integer `x`, 0 on
/// integers.
pub fn sawtooth(x: &BigRational) -> BigRational {
    if x.is_integer() {
        return BigRational::zero();
    }
    x - x.floor() - BigRational::new(BigInt::one(), BigInt::from(2))
}

/// The classical Dedekind sum by its definition, summed over `k = 1..b`.
///
/// Refuses moduli above [`NAIVE_BOUND`]; this is the oracle, not the
/// production path.
pub fn s_naive(p: &ArgPair) -> Result<BigRational> {
    let bound = BigInt::from(NAIVE_BOUND);
    if p.modulus > bound {
        return Err(Error::BoundExceeded {
            value: p.modulus.clone(),
            bound,
        });
    }
    let b = u64::try_from(&p.modulus).expect("bounded");
    let c = u64::try_from(&p.argument).expect("canonical");
    if b == 1 {
        return Ok(BigRational::zero());
    }
    // For 1 <= k <= b-1 neither k/b nor ck/b is an integer (gcd(c,b)=1),
    // so ((k/b))((ck/b)) = (2k - b)(2(ck mod b) - b) / (4b^2).
    let bi = b as i128;
    let mut sum: i128 = 0;
    let mut ck: u64 = 0;
    for k in 1..b {
        ck += c;
        if ck >= b {
            ck -= b;
        }
        sum += (2 * k as i128 - bi) * (2 * ck as i128 - bi);
    }
    Ok(BigRational::new(BigInt::from(sum), BigInt::from(4 * bi * bi)))
}

/// The classical Dedekind sum via Euclidean descent.
///
/// Uses reciprocity `S(c,b) + S(b,c) = (b^2 + c^2 + 1)/(bc) - 3` together
/// with periodicity, closing with `S(1,b) = (b-1)(b-2)/b`. Iterative, so
/// the depth is bounded by the Euclidean step count.
pub fn s_fast(p: &ArgPair) -> BigRational {
    big_s_fast_inner(p.argument.clone(), p.modulus.clone()) / BigInt::from(12)
}

/// The normalized Dedekind sum `S(c, b) = 12 s(c, b)`.
pub fn big_s(p: &ArgPair) -> BigRational {
    big_s_fast_inner(p.argument.clone(), p.modulus.clone())
}

/// Normalized sum through the naive oracle; bounded like [`s_naive`].
pub fn big_s_naive(p: &ArgPair) -> Result<BigRational> {
    Ok(s_naive(p)? * BigInt::from(12))
}

fn big_s_fast_inner(mut c: BigInt, mut b: BigInt) -> BigRational {
    let one = BigInt::one();
    let two = BigInt::from(2);
    let three = BigRational::from_integer(BigInt::from(3));
    let mut acc = BigRational::zero();
    let mut negate = false;
    loop {
        if b.is_one() {
            break;
        }
        if c.is_one() {
            // S(1, b) = (b - 1)(b - 2) / b
            let term = BigRational::new((&b - &one) * (&b - &two), b.clone());
            acc += if negate { -term } else { term };
            break;
        }
        // S(c, b) = (b^2 + c^2 + 1)/(bc) - 3 - S(b mod c, c)
        let num = &b * &b + &c * &c + &one;
        let term = BigRational::new(num, &b * &c) - &three;
        acc += if negate { -term } else { term };
        let r = b.mod_floor(&c);
        b = std::mem::replace(&mut c, r);
        negate = !negate;
    }
    acc
}

/// Whether `c^2 = -1 (mod b)`; a sufficient condition for `S(c, b) = 0`.
pub fn is_zero_sum_argument(p: &ArgPair) -> bool {
    (&p.argument * &p.argument + BigInt::one())
        .mod_floor(&p.modulus)
        .is_zero()
}

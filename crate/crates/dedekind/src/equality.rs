//! Deciding equality of two Dedekind sums sharing a modulus.
//!
//! The decision procedure rests on the three-term relation: two sums
//! `S(c, b)`, `S(d, b)` with `b | (c - d)(cd - 1)` are equal exactly when
//! one further sum `S(1 + ct, bt)` hits the value `(t^2 + 2)/(bt) - 3`.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{ext_gcd, gcd, mod_inverse};
use crate::error::{Error, Result};
use crate::sums::{big_s, ArgPair};

/// A modulus together with two candidate arguments, both coprime to it
/// and canonical in `[0, b - 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidatePair {
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl CandidatePair {
    pub fn new(b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        if b < BigInt::one() {
            return Err(Error::InvalidModulus(b));
        }
        let c = c.mod_floor(&b);
        let d = d.mod_floor(&b);
        for a in [&c, &d] {
            if !gcd(a, &b).is_one() && !b.is_one() {
                return Err(Error::NotCoprime {
                    a: a.clone(),
                    b: b.clone(),
                });
            }
        }
        Ok(Self { b, c, d })
    }

    pub fn modulus(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// The necessary condition for equality: `b | (c - d)(cd - 1)`,
    /// equivalently `S(c, b) - S(d, b)` is an integer.
    pub fn necessary_condition(&self) -> bool {
        ((&self.c - &self.d) * (&self.c * &self.d - BigInt::one()))
            .mod_floor(&self.b)
            .is_zero()
    }

    /// The unique `t` in `[1, b - 1]` with `t = c - d (mod b)`.
    pub fn least_positive_t(&self) -> Result<BigInt> {
        let t = (&self.c - &self.d).mod_floor(&self.b);
        if t.is_zero() {
            return Err(Error::CongruentArguments);
        }
        Ok(t)
    }

    /// Whether `c - d = d* - c* (mod b)`; a consequence of the necessary
    /// condition.
    pub fn inverse_difference_congruent(&self) -> bool {
        let c_inv = mod_inverse(&self.c, &self.b).expect("coprime by construction");
        let d_inv = mod_inverse(&self.d, &self.b).expect("coprime by construction");
        (&self.c - &self.d - (d_inv - c_inv)).mod_floor(&self.b).is_zero()
    }
}

/// An instance of the three-term relation: `S(A, B)` decomposed against
/// `S(C, D)` and `S(R, Q)` where `Q = AD - BC` and `R = Aj - Bk` for any
/// `(j, k)` with `-Cj + Dk = 1`.
#[derive(Debug, Clone)]
pub struct ThreeTermInstance {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
    j: BigInt,
    k: BigInt,
    q: BigInt,
    r: BigInt,
}

impl ThreeTermInstance {
    /// Builds the instance, deriving `(j, k)` by the extended Euclidean
    /// algorithm from `(C, D)`.
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        if b < BigInt::one() || d < BigInt::one() {
            return Err(Error::PreconditionViolated(
                "B and D must be natural numbers".into(),
            ));
        }
        if !gcd(&a, &b).is_one() || !gcd(&c, &d).is_one() {
            return Err(Error::PreconditionViolated(
                "(A, B) and (C, D) must be coprime".into(),
            ));
        }
        let q = &a * &d - &b * &c;
        if q <= BigInt::zero() {
            return Err(Error::PreconditionViolated("Q = AD - BC must be > 0".into()));
        }
        // -Cj + Dk = 1: solve D*x + C*y = 1, take k = x, j = -y
        let (g, x, y) = ext_gcd(&d, &c);
        debug_assert!(g.is_one());
        let (j, k) = (-y, x);
        let r = &a * &j - &b * &k;
        Ok(Self { a, b, c, d, j, k, q, r })
    }

    /// As [`new`](Self::new) but with a caller-chosen `(j, k)`.
    pub fn with_solution(a: BigInt, b: BigInt, c: BigInt, d: BigInt, j: BigInt, k: BigInt) -> Result<Self> {
        let base = Self::new(a, b, c, d)?;
        if (-&base.c * &j + &base.d * &k) != BigInt::one() {
            return Err(Error::PreconditionViolated("-Cj + Dk must equal 1".into()));
        }
        let r = &base.a * &j - &base.b * &k;
        Ok(Self { j, k, r, ..base })
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn jk(&self) -> (&BigInt, &BigInt) {
        (&self.j, &self.k)
    }

    /// `S(A,B) - S(C,D) - S(R,Q) - (B^2 + D^2 + Q^2)/(BDQ) + 3`; always 0.
    pub fn residual(&self) -> Result<BigRational> {
        let s_ab = big_s(&ArgPair::new(self.a.clone(), self.b.clone())?);
        let s_cd = big_s(&ArgPair::new(self.c.clone(), self.d.clone())?);
        let s_rq = big_s(&ArgPair::new(self.r.clone(), self.q.clone())?);
        let num = &self.b * &self.b + &self.d * &self.d + &self.q * &self.q;
        let frac = BigRational::new(num, &self.b * &self.d * &self.q);
        Ok(s_ab - s_cd - s_rq - frac + BigRational::from_integer(BigInt::from(3)))
    }
}

/// Residual of the difference identity
/// `S(1 + d*t, bt) - ((t^2 + 2)/(bt) - 3) - (S(d, b) - S(c, b))` with
/// `t = c - d (mod b)` least positive; always 0.
pub fn difference_identity_residual(p: &CandidatePair) -> Result<BigRational> {
    let t = p.least_positive_t()?;
    let d_inv = mod_inverse(p.d(), p.modulus())?;
    let bt = p.modulus() * &t;
    let lhs = big_s(&ArgPair::new(BigInt::one() + d_inv * &t, bt.clone())?);
    let target = criterion_target(&t, p.modulus());
    let s_c = big_s(&ArgPair::new(p.c().clone(), p.modulus().clone())?);
    let s_d = big_s(&ArgPair::new(p.d().clone(), p.modulus().clone())?);
    Ok(lhs - target - (s_d - s_c))
}

/// `(t^2 + 2)/(bt) - 3`, the value the criterion sum must attain.
pub fn criterion_target(t: &BigInt, b: &BigInt) -> BigRational {
    BigRational::new(t * t + BigInt::from(2), b * t) - BigRational::from_integer(BigInt::from(3))
}

/// Decides `S(c, b) = S(d, b)` by evaluating the single criterion sum
/// `S(1 + ct, bt)`; never computes `S(c, b)` or `S(d, b)` themselves.
pub fn decide_equal(p: &CandidatePair) -> Result<bool> {
    if !p.necessary_condition() {
        return Err(Error::Condition2Violated);
    }
    let t = p.least_positive_t()?;
    decide_equal_with_t(p, &t)
}

/// The criterion with an explicit `t > 0` congruent to `c - d (mod b)`;
/// any such `t` yields the same verdict.
pub fn decide_equal_with_t(p: &CandidatePair, t: &BigInt) -> Result<bool> {
    if t <= &BigInt::zero() || (t - (p.c() - p.d())).mod_floor(p.modulus()) != BigInt::zero() {
        return Err(Error::PreconditionViolated(
            "t must be positive and congruent to c - d mod b".into(),
        ));
    }
    let bt = p.modulus() * t;
    let criterion = big_s(&ArgPair::new(BigInt::one() + p.c() * t, bt)?);
    Ok(criterion == criterion_target(t, p.modulus()))
}

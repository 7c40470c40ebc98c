//! Construction of 2^k-sized families of arguments sharing the Dedekind
//! sum value `(t^2 + 2)/b - 3`.
//!
//! Given head primes congruent to +-1 mod 5 and tail primes congruent
//! to 1 mod their product, the family members are assembled by the
//! Chinese remainder theorem from the residues `(3 +- sqrt(5))/2` at
//! each head prime and `1` at each tail prime.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::One;

use crate::arith::{crt, gcd, is_prime, mod_inverse, sqrt_mod_p};
use crate::error::{Error, Result};
use crate::sums::{big_s, ArgPair};

/// Default ceiling on `b` for the exhaustive family verification sweep.
pub const DEFAULT_SWEEP_BOUND: u64 = 1_000_000;

/// Validated input primes, with the derived products.
#[derive(Debug, Clone)]
pub struct FamilyInput {
    head: Vec<BigInt>,
    tail: Vec<BigInt>,
    b0: BigInt,
    b: BigInt,
    t: BigInt,
}

impl FamilyInput {
    /// Checks the hypotheses: distinct primes, head primes +-1 mod 5,
    /// tail primes 1 mod the head product, at least one head prime.
    pub fn new(head: Vec<BigInt>, tail: Vec<BigInt>) -> Result<Self> {
        if head.is_empty() {
            return Err(Error::PreconditionViolated(
                "at least one head prime is required".into(),
            ));
        }
        let mut seen: Vec<&BigInt> = Vec::new();
        for p in head.iter().chain(tail.iter()) {
            if seen.contains(&p) {
                return Err(Error::DuplicatePrime(p.clone()));
            }
            seen.push(p);
            if !is_prime(p) {
                return Err(Error::NotPrime(p.clone()));
            }
        }
        let five = BigInt::from(5);
        for p in &head {
            let r = p.mod_floor(&five);
            if r != BigInt::one() && r != BigInt::from(4) {
                return Err(Error::NotPlusMinusOneMod5(p.clone()));
            }
        }
        let b0: BigInt = head.iter().product();
        for p in &tail {
            if !p.mod_floor(&b0).is_one() {
                return Err(Error::TailNotOneModB0 {
                    p: p.clone(),
                    b0: b0.clone(),
                });
            }
        }
        let t: BigInt = tail.iter().product();
        let b = &b0 * &t;
        Ok(Self { head, tail, b0, b, t })
    }

    pub fn head(&self) -> &[BigInt] {
        &self.head
    }

    pub fn tail(&self) -> &[BigInt] {
        &self.tail
    }

    pub fn head_product(&self) -> &BigInt {
        &self.b0
    }

    pub fn modulus(&self) -> &BigInt {
        &self.b
    }

    pub fn tail_product(&self) -> &BigInt {
        &self.t
    }
}

/// A family of arguments all attaining `(t^2 + 2)/b - 3`.
#[derive(Debug, Clone)]
pub struct CrtFamily {
    pub b: BigInt,
    pub t: BigInt,
    pub k: usize,
    pub r: usize,
    pub target_value: BigRational,
    /// Sorted ascending; exactly `2^k` members, each coprime to `b`.
    pub members: Vec<BigInt>,
    /// The square root of 5 chosen at each head prime (the smaller one).
    pub witness_roots: Vec<BigInt>,
}

/// Builds the full member family and verifies each member attains the
/// target value.
pub fn build_family(input: &FamilyInput) -> Result<CrtFamily> {
    let k = input.head.len();
    let r = k + input.tail.len();
    let target_value = BigRational::new(&input.t * &input.t + BigInt::from(2), input.b.clone())
        - BigRational::from_integer(BigInt::from(3));

    let mut roots = Vec::with_capacity(k);
    let mut plus = Vec::with_capacity(k);
    let mut minus = Vec::with_capacity(k);
    for p in &input.head {
        let (alpha, _) = sqrt_mod_p(&BigInt::from(5), p)?
            .expect("5 is a residue mod primes = +-1 mod 5");
        let half = mod_inverse(&BigInt::from(2), p)?;
        plus.push(((BigInt::from(3) + &alpha) * &half).mod_floor(p));
        minus.push(((BigInt::from(3) - &alpha) * &half).mod_floor(p));
        roots.push(alpha);
    }

    let mut members = Vec::with_capacity(1 << k);
    for signs in 0u64..(1 << k) {
        let mut residues: Vec<(BigInt, BigInt)> = Vec::with_capacity(r);
        for (i, p) in input.head.iter().enumerate() {
            let res = if signs >> i & 1 == 0 { &plus[i] } else { &minus[i] };
            residues.push((res.clone(), p.clone()));
        }
        for p in &input.tail {
            residues.push((BigInt::one(), p.clone()));
        }
        let m = crt(&residues)?.mod_floor(&input.b);
        debug_assert!(gcd(&m, &input.b).is_one());
        let value = big_s(&ArgPair::new(m.clone(), input.b.clone())?);
        if value != target_value {
            return Err(Error::PreconditionViolated(format!(
                "member {m} does not attain the target value"
            )));
        }
        members.push(m);
    }
    members.sort();
    members.dedup();
    if members.len() != 1 << k {
        return Err(Error::PreconditionViolated(
            "family members are not distinct".into(),
        ));
    }
    Ok(CrtFamily {
        b: input.b.clone(),
        t: input.t.clone(),
        k,
        r,
        target_value,
        members,
        witness_roots: roots,
    })
}

/// Exhaustively sweeps `c = 1..b-1` and checks that the arguments
/// attaining the target value are exactly the family members.
pub fn verify_family_exact_count(family: &CrtFamily, sweep_bound: u64) -> Result<bool> {
    if family.b > BigInt::from(sweep_bound) {
        return Err(Error::BoundExceeded {
            value: family.b.clone(),
            bound: BigInt::from(sweep_bound),
        });
    }
    let b = u64::try_from(&family.b).expect("bounded");
    let attaining: Vec<BigInt> = crate::census::sweep_values(b)
        .into_iter()
        .filter(|(_, v)| v == &family.target_value)
        .map(|(c, _)| BigInt::from(c))
        .collect();
    Ok(attaining == family.members)
}

impl CrtFamily {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "b": self.b.to_string(),
            "t": self.t.to_string(),
            "k": self.k,
            "r": self.r,
            "target_value": crate::render::rational(&self.target_value),
            "members": self.members.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "witness_roots": self.witness_roots.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        })
    }
}

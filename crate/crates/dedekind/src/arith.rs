//! Elementary number-theoretic primitives on arbitrary-precision integers.
//!
//! Everything here is exact: integers are [`BigInt`], rationals are
//! [`BigRational`] kept in lowest terms with a positive denominator.
//! No floating point enters the computational path.

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer as _;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Default ceiling for [`factor_squarefree`] trial division.
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000_000_000;

/// Nonnegative greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// Solves `a*x + b*y = gcd(a, b)`, returning `(gcd, x, y)` with `gcd >= 0`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    (e.gcd, e.x, e.y)
}

/// Canonical residue of `a` in `[0, m - 1]`.
pub fn mod_reduce(a: &BigInt, m: &BigInt) -> BigInt {
    a.mod_floor(m)
}

/// The unique `x` in `[0, b - 1]` with `c * x = 1 (mod b)`.
///
/// For `b = 1` the result is 0.
pub fn mod_inverse(c: &BigInt, b: &BigInt) -> Result<BigInt> {
    if b < &BigInt::one() {
        return Err(Error::InvalidModulus(b.clone()));
    }
    let (g, x, _) = ext_gcd(c, b);
    if !g.is_one() {
        return Err(Error::NotCoprime {
            a: c.clone(),
            b: b.clone(),
        });
    }
    Ok(x.mod_floor(b))
}

/// Chinese remainder theorem for pairwise coprime moduli.
///
/// Returns the unique `x` in `[0, prod(m) - 1]` with `x = r_i (mod m_i)`.
pub fn crt(residues: &[(BigInt, BigInt)]) -> Result<BigInt> {
    let mut x = BigInt::zero();
    let mut modulus = BigInt::one();
    for (r, m) in residues {
        if m < &BigInt::one() {
            return Err(Error::InvalidModulus(m.clone()));
        }
        if !gcd(&modulus, m).is_one() {
            return Err(Error::ModuliNotCoprime);
        }
        // x' = x (mod modulus), x' = r (mod m)
        let inv = mod_inverse(&modulus, m).map_err(|_| Error::ModuliNotCoprime)?;
        let diff = (r - &x).mod_floor(m);
        x += &modulus * (diff * inv).mod_floor(m);
        modulus *= m;
        x = x.mod_floor(&modulus);
    }
    Ok(x)
}

/// Primality test.
///
/// Deterministic Miller-Rabin for `n < 2^64`; for larger `n` a
/// probabilistic Miller-Rabin with 64 pseudorandom bases, so the error
/// probability is below `4^-64 = 2^-128`. The base stream is derived
/// from `n` itself, so answers are reproducible.
pub fn is_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    let n_uint = n.magnitude().clone();
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigUint::from(p);
        if n_uint == p {
            return true;
        }
        if (&n_uint % &p).is_zero() {
            return false;
        }
    }
    // n - 1 = d * 2^s with d odd
    let one = BigUint::one();
    let n_minus_1 = &n_uint - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;

    let witness = |a: &BigUint| -> bool {
        // true when a proves n composite
        let mut x = a.modpow(&d, &n_uint);
        if x == one || x == n_minus_1 {
            return false;
        }
        for _ in 1..s {
            x = (&x * &x) % &n_uint;
            if x == n_minus_1 {
                return false;
            }
        }
        true
    };

    if n.bits() <= 64 {
        // this base set decides primality for all n < 2^64
        for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
            if witness(&BigUint::from(a)) {
                return false;
            }
        }
        return true;
    }

    let mut seed = [0u8; 32];
    for (i, byte) in n_uint.to_bytes_le().iter().enumerate().take(32) {
        seed[i] ^= *byte;
    }
    let mut rng = ChaCha8Rng::from_seed(seed);
    let low = BigUint::from(2u32);
    let high = &n_minus_1 - &one;
    for _ in 0..64 {
        let a = rng.gen_biguint_range(&low, &high);
        if witness(&a) {
            return false;
        }
    }
    true
}

/// The two square roots of `a` modulo an odd prime `p`.
///
/// Returns `Some((x, p - x))` with `x <= p - x` when `a` is a quadratic
/// residue, `Some((0, 0))` when `a = 0 (mod p)`, `None` for a nonresidue.
pub fn sqrt_mod_p(a: &BigInt, p: &BigInt) -> Result<Option<(BigInt, BigInt)>> {
    if p < &BigInt::from(3) || p.is_even() || !is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    let a = a.mod_floor(p);
    if a.is_zero() {
        return Ok(Some((BigInt::zero(), BigInt::zero())));
    }
    let one = BigInt::one();
    let two = BigInt::from(2);
    let p_minus_1 = p - &one;
    let legendre_exp = &p_minus_1 / &two;
    if a.modpow(&legendre_exp, p) != one {
        return Ok(None);
    }

    let x = if p.mod_floor(&BigInt::from(4)) == BigInt::from(3) {
        a.modpow(&((p + &one) / BigInt::from(4)), p)
    } else {
        tonelli_shanks(&a, p)
    };
    let other = p - &x;
    Ok(Some(if x <= other { (x, other) } else { (other, x) }))
}

// Tonelli-Shanks for p = 1 (mod 4); a must be a residue.
fn tonelli_shanks(a: &BigInt, p: &BigInt) -> BigInt {
    let one = BigInt::one();
    let two = BigInt::from(2);
    let p_minus_1 = p - &one;
    let legendre_exp = &p_minus_1 / &two;

    // p - 1 = q * 2^s with q odd
    let mut q = p_minus_1.clone();
    let mut s = 0u64;
    while q.is_even() {
        q /= &two;
        s += 1;
    }

    // least quadratic nonresidue
    let mut z = two.clone();
    while z.modpow(&legendre_exp, p) == one {
        z += &one;
    }

    let mut m = s;
    let mut c = z.modpow(&q, p);
    let mut t = a.modpow(&q, p);
    let mut r = a.modpow(&((&q + &one) / &two), p);

    while !t.is_one() {
        let mut i = 0u64;
        let mut t2 = t.clone();
        while !t2.is_one() {
            t2 = (&t2 * &t2).mod_floor(p);
            i += 1;
        }
        let mut b = c.clone();
        for _ in 0..(m - i - 1) {
            b = (&b * &b).mod_floor(p);
        }
        m = i;
        c = (&b * &b).mod_floor(p);
        t = (&t * &c).mod_floor(p);
        r = (&r * &b).mod_floor(p);
    }
    r
}

/// Factors a square-free `n >= 1` into its ascending list of primes by
/// trial division. Returns `None` when `n` has a square factor.
pub fn factor_squarefree(n: &BigInt, bound: u64) -> Result<Option<Vec<BigInt>>> {
    if n < &BigInt::one() {
        return Err(Error::InvalidModulus(n.clone()));
    }
    if n > &BigInt::from(bound) {
        return Err(Error::BoundExceeded {
            value: n.clone(),
            bound: BigInt::from(bound),
        });
    }
    let mut m = u64::try_from(n).expect("bound fits u64");
    let mut primes = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return Ok(None);
            }
            primes.push(BigInt::from(p));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        primes.push(BigInt::from(m));
    }
    Ok(Some(primes))
}

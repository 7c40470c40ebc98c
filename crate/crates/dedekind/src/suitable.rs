//! Suitable sets and the recursion that turns one of them into an
//! infinite sequence of pairwise equal Dedekind sums.
//!
//! A suitable set for a modulus `b` is an unordered pair `{c, d}` of
//! arguments coprime to `b` with `d` congruent to neither `c` nor `c*`
//! and `S(c, b) = S(d, b) != 0`. One step maps it to a suitable set for
//! the strictly larger modulus `bt`, where `t = d - c* (mod b)`.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{gcd, mod_inverse};
use crate::error::{Error, Result};
use crate::sums::{big_s, ArgPair};

/// Default cap on generated sequence length; moduli roughly square each
/// step, so digit counts double.
pub const DEFAULT_MAX_STEPS: usize = 12;

/// A verified suitable set together with the common value `S(c, b)`.
#[derive(Debug, Clone)]
pub struct SuitableSet {
    b: BigInt,
    c: BigInt,
    d: BigInt,
    common_value: BigRational,
}

/// Whether `{c, d}` is a suitable set for `b`.
pub fn is_suitable(b: &BigInt, c: &BigInt, d: &BigInt) -> bool {
    if b < &BigInt::from(2) {
        return false;
    }
    if !gcd(c, b).is_one() || !gcd(d, b).is_one() {
        return false;
    }
    let c = c.mod_floor(b);
    let d = d.mod_floor(b);
    if c == d {
        return false;
    }
    let c_inv = mod_inverse(&c, b).expect("coprime");
    if d == c_inv {
        return false;
    }
    let s_c = big_s(&ArgPair::new(c, b.clone()).expect("coprime"));
    if s_c.is_zero() {
        return false;
    }
    let s_d = big_s(&ArgPair::new(d, b.clone()).expect("coprime"));
    s_c == s_d
}

impl SuitableSet {
    pub fn try_new(b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        if !is_suitable(&b, &c, &d) {
            return Err(Error::NotSuitable);
        }
        let c = c.mod_floor(&b);
        let d = d.mod_floor(&b);
        let common_value = big_s(&ArgPair::new(c.clone(), b.clone())?);
        Ok(Self { b, c, d, common_value })
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

    pub fn common_value(&self) -> &BigRational {
        &self.common_value
    }

    /// The three companion sets `{c, d*}`, `{c*, d}`, `{c*, d*}`, each
    /// suitable for the same modulus.
    pub fn derived_sets(&self) -> Result<[SuitableSet; 3]> {
        let c_inv = mod_inverse(&self.c, &self.b)?;
        let d_inv = mod_inverse(&self.d, &self.b)?;
        Ok([
            SuitableSet::try_new(self.b.clone(), self.c.clone(), d_inv.clone())?,
            SuitableSet::try_new(self.b.clone(), c_inv.clone(), self.d.clone())?,
            SuitableSet::try_new(self.b.clone(), c_inv, d_inv)?,
        ])
    }

    /// The step multiplier: the least positive `t = d - c* (mod b)`.
    pub fn step_multiplier(&self) -> Result<BigInt> {
        let c_inv = mod_inverse(&self.c, &self.b)?;
        let t = (&self.d - c_inv).mod_floor(&self.b);
        debug_assert!(!t.is_zero(), "d != c* for a suitable set");
        Ok(t)
    }
}

// {c, d} is an unordered pair
impl PartialEq for SuitableSet {
    fn eq(&self, other: &Self) -> bool {
        self.b == other.b
            && ((self.c == other.c && self.d == other.d)
                || (self.c == other.d && self.d == other.c))
    }
}

impl Eq for SuitableSet {}

/// One step of the sequence: the set, its index, and the multiplier
/// that produces the next modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceState {
    pub index: usize,
    pub set: SuitableSet,
    pub t: BigInt,
}

impl SequenceState {
    pub fn modulus(&self) -> &BigInt {
        self.set.modulus()
    }

    pub fn c(&self) -> &BigInt {
        self.set.c()
    }

    pub fn d(&self) -> &BigInt {
        self.set.d()
    }

    pub fn common_value(&self) -> &BigRational {
        self.set.common_value()
    }
}

/// Maps a suitable set for `b` to one for `bt`:
/// `(b, c, d) -> (bt, 1 + ct, 1 + dt)`.
pub fn sequence_step(set: &SuitableSet) -> Result<SuitableSet> {
    let t = set.step_multiplier()?;
    SuitableSet::try_new(
        set.modulus() * &t,
        BigInt::one() + set.c() * &t,
        BigInt::one() + set.d() * &t,
    )
}

/// Generates `n` states starting from the seed (the seed is state 0).
///
/// `max_steps` guards against the doubly-exponential growth of the
/// moduli; [`DEFAULT_MAX_STEPS`] is a sensible default.
pub fn generate_sequence(seed: &SuitableSet, n: usize, max_steps: usize) -> Result<Vec<SequenceState>> {
    if n > max_steps {
        return Err(Error::StepLimitExceeded {
            requested: n,
            limit: max_steps,
        });
    }
    let mut states = Vec::with_capacity(n);
    let mut current = seed.clone();
    for index in 0..n {
        let t = current.step_multiplier()?;
        let next = if index + 1 < n {
            Some(sequence_step(&current)?)
        } else {
            None
        };
        states.push(SequenceState { index, set: current, t });
        match next {
            Some(s) => current = s,
            None => break,
        }
    }
    Ok(states)
}

/// The exact ratios `t_i / b_i`, for inspection of the sequence's
/// trajectory. No convergence claim attaches to these.
pub fn ratio_trace(states: &[SequenceState]) -> Vec<BigRational> {
    states
        .iter()
        .map(|s| BigRational::new(s.t.clone(), s.modulus().clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equality::criterion_target;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn set(b: i64, c: i64, d: i64) -> SuitableSet {
        SuitableSet::try_new(int(b), int(c), int(d)).unwrap()
    }

    #[test]
    fn suitability_cases() {
        assert!(is_suitable(&int(77), &int(16), &int(60)));
        // 16 * 53 = 1 mod 77, so d = c*
        assert!(!is_suitable(&int(77), &int(16), &int(53)));
        // S(2,5) = S(3,5) = 0
        assert!(!is_suitable(&int(5), &int(2), &int(3)));
        assert!(!is_suitable(&int(5), &int(1), &int(2)));
        assert!(!is_suitable(&int(7), &int(3), &int(3)));
    }

    #[test]
    fn derived_sets_of_example_seed() {
        let s = set(77, 16, 60);
        let derived = s.derived_sets().unwrap();
        assert_eq!(derived[0], set(77, 16, 9)); // 60* = 9
        assert_eq!(derived[1], set(77, 53, 60)); // 16* = 53
        assert_eq!(derived[2], set(77, 53, 9));
        // unordered equality
        assert_eq!(set(77, 16, 9), set(77, 9, 16));
        // applying * twice comes back
        let again = derived[0].derived_sets().unwrap();
        assert!(again.contains(&s));
    }

    #[test]
    fn derived_sets_of_first_step() {
        let s = set(539, 113, 421);
        for d in s.derived_sets().unwrap() {
            assert!(is_suitable(d.modulus(), d.c(), d.d()));
        }
    }

    #[test]
    fn step_reproduces_printed_sequence() {
        let s0 = set(77, 16, 60);
        assert_eq!(s0.step_multiplier().unwrap(), int(7));
        let s1 = sequence_step(&s0).unwrap();
        assert_eq!((s1.modulus(), s1.c(), s1.d()), (&int(539), &int(113), &int(421)));

        assert_eq!(s1.step_multiplier().unwrap(), int(483));
        let s2 = sequence_step(&s1).unwrap();
        assert_eq!(
            (s2.modulus(), s2.c(), s2.d()),
            (&int(260337), &int(54580), &int(203344))
        );

        assert_eq!(s2.step_multiplier().unwrap(), int(24633));
        let s3 = sequence_step(&s2).unwrap();
        assert_eq!(
            (s3.modulus(), s3.c(), s3.d()),
            (&int(6412881321), &int(1344469141), &int(5008972753))
        );
    }

    #[test]
    fn step_rejects_unsuitable_seed() {
        assert!(matches!(
            SuitableSet::try_new(int(5), int(1), int(2)),
            Err(Error::NotSuitable)
        ));
    }

    #[test]
    fn generated_sequence_invariants() {
        let states = generate_sequence(&set(85, 7, 22), 3, DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(states.len(), 3);
        for w in states.windows(2) {
            assert!(w[1].modulus() > w[0].modulus());
            // divisor chain and composition of the step
            assert!(w[1].t.mod_floor(&w[0].t).is_zero());
            assert_eq!(w[1].modulus(), &(w[0].modulus() * &w[0].t));
            // common value from the criterion target of the previous step
            assert_eq!(w[1].common_value(), &criterion_target(&w[0].t, w[0].modulus()));
            // d' - c' = (d - c) t (mod bt)
            assert_eq!(
                (w[1].d() - w[1].c()).mod_floor(w[1].modulus()),
                ((w[0].d() - w[0].c()) * &w[0].t).mod_floor(w[1].modulus())
            );
        }
        for s in &states {
            assert!(is_suitable(s.modulus(), s.c(), s.d()));
            assert!(gcd(&s.t, s.modulus()) > BigInt::one());
        }
    }

    #[test]
    fn generate_respects_step_cap() {
        assert!(matches!(
            generate_sequence(&set(77, 16, 60), 13, DEFAULT_MAX_STEPS),
            Err(Error::StepLimitExceeded { .. })
        ));
    }

    #[test]
    fn ratio_trace_of_example_sequence() {
        let states = generate_sequence(&set(77, 16, 60), 2, DEFAULT_MAX_STEPS).unwrap();
        let trace = ratio_trace(&states);
        assert_eq!(trace[0], BigRational::new(int(1), int(11))); // 7/77
        assert_eq!(trace[1], BigRational::new(int(69), int(77))); // 483/539
        assert!(ratio_trace(&[]).is_empty());
    }
}

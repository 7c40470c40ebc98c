//! Exhaustive per-modulus analysis: equality classes, N(c, b) counts,
//! suitable-set search, and the square-free parity and 2^r bound checks.
//!
//! Sweeps are embarrassingly parallel over the argument range; with the
//! `parallel` feature the evaluation is split across rayon workers and
//! merged in argument order, so results are deterministic either way.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::arith::{factor_squarefree, is_prime, mod_inverse};
use crate::error::{Error, Result};
use crate::render;
use crate::sums::{big_s, ArgPair};

/// Default ceiling on moduli for exhaustive sweeps.
pub const DEFAULT_SWEEP_BOUND: u64 = 1_000_000;

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn eval(c: u64, b: u64) -> (u64, BigRational) {
    let pair = ArgPair::new(BigInt::from(c), BigInt::from(b)).expect("coprime by filter");
    (c, big_s(&pair))
}

/// `S(c, b)` for every coprime `c` in `[1, b - 1]`, ascending by `c`.
/// Single-threaded reference path.
pub fn sweep_values_serial(b: u64) -> Vec<(u64, BigRational)> {
    (1..b)
        .filter(|c| gcd_u64(*c, b) == 1)
        .map(|c| eval(c, b))
        .collect()
}

/// `S(c, b)` for every coprime `c` in `[1, b - 1]`, ascending by `c`.
/// Runs on the rayon pool when the `parallel` feature is enabled.
#[cfg(feature = "parallel")]
pub fn sweep_values(b: u64) -> Vec<(u64, BigRational)> {
    (1..b)
        .into_par_iter()
        .filter(|c| gcd_u64(*c, b) == 1)
        .map(|c| eval(c, b))
        .collect()
}

#[cfg(not(feature = "parallel"))]
pub fn sweep_values(b: u64) -> Vec<(u64, BigRational)> {
    sweep_values_serial(b)
}

/// Complete equality analysis of a single modulus.
#[derive(Debug, Clone)]
pub struct CensusReport {
    pub b: BigInt,
    /// value -> ascending arguments attaining it; every coprime argument
    /// appears in exactly one class.
    pub classes: BTreeMap<BigRational, Vec<BigInt>>,
    pub distinct_positive_count: usize,
    /// Positive values whose class contains a nontrivially equal pair,
    /// sorted descending. Negative mirrors are visible in `classes`.
    pub nontrivial_values: Vec<BigRational>,
}

fn class_is_nontrivial(b: &BigInt, args: &[BigInt]) -> bool {
    // a class always contains c* along with c, so it is nontrivial iff
    // some member differs from both the first member and its inverse
    match args.len() {
        0 | 1 => false,
        _ => {
            let inv = mod_inverse(&args[0], b).expect("class members are coprime");
            args[1..].iter().any(|d| d != &inv)
        }
    }
}

fn check_sweep_bound(b: &BigInt, sweep_bound: u64) -> Result<u64> {
    if b < &BigInt::one() {
        return Err(Error::InvalidModulus(b.clone()));
    }
    if b > &BigInt::from(sweep_bound) {
        return Err(Error::BoundExceeded {
            value: b.clone(),
            bound: BigInt::from(sweep_bound),
        });
    }
    Ok(u64::try_from(b).expect("bounded"))
}

/// Sweeps all arguments of `b` and groups them into equality classes.
pub fn full_census(b: &BigInt, sweep_bound: u64) -> Result<CensusReport> {
    let b_small = check_sweep_bound(b, sweep_bound)?;
    build_report(b, sweep_values(b_small))
}

/// As [`full_census`] but evaluating every sum through the naive oracle.
pub fn full_census_naive(b: &BigInt, sweep_bound: u64) -> Result<CensusReport> {
    let b_small = check_sweep_bound(b, sweep_bound)?;
    let values = (1..b_small)
        .filter(|c| gcd_u64(*c, b_small) == 1)
        .map(|c| {
            let pair = ArgPair::new(BigInt::from(c), b.clone())?;
            Ok((c, crate::sums::big_s_naive(&pair)?))
        })
        .collect::<Result<Vec<_>>>()?;
    build_report(b, values)
}

fn build_report(b: &BigInt, values: Vec<(u64, BigRational)>) -> Result<CensusReport> {
    let mut classes: BTreeMap<BigRational, Vec<BigInt>> = BTreeMap::new();
    for (c, v) in values {
        classes.entry(v).or_default().push(BigInt::from(c));
    }
    let distinct_positive_count = classes.keys().filter(|v| v.is_positive()).count();
    let mut nontrivial_values: Vec<BigRational> = classes
        .iter()
        .filter(|(v, args)| v.is_positive() && class_is_nontrivial(b, args))
        .map(|(v, _)| v.clone())
        .collect();
    nontrivial_values.reverse();
    Ok(CensusReport {
        b: b.clone(),
        classes,
        distinct_positive_count,
        nontrivial_values,
    })
}

impl CensusReport {
    /// The class containing `c`, if `c` is a swept argument.
    pub fn class_of(&self, c: &BigInt) -> Option<(&BigRational, &[BigInt])> {
        self.classes
            .iter()
            .find(|(_, args)| args.contains(c))
            .map(|(v, args)| (v, args.as_slice()))
    }

    /// Rows `(c, S(c, b), N(c, b))` ascending by argument.
    pub fn rows(&self) -> Vec<(BigInt, BigRational, usize)> {
        let mut rows: Vec<(BigInt, BigRational, usize)> = self
            .classes
            .iter()
            .flat_map(|(v, args)| args.iter().map(move |c| (c.clone(), v.clone(), args.len())))
            .collect();
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        rows
    }

    pub fn to_json(&self) -> serde_json::Value {
        let classes: serde_json::Map<String, serde_json::Value> = self
            .classes
            .iter()
            .map(|(v, args)| {
                (
                    render::rational(v),
                    serde_json::Value::from(
                        args.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    ),
                )
            })
            .collect();
        serde_json::json!({
            "b": self.b.to_string(),
            "distinct_positive_count": self.distinct_positive_count,
            "nontrivial_values": self.nontrivial_values.iter().map(render::rational).collect::<Vec<_>>(),
            "classes": classes,
            "table": self.rows().iter().map(|(c, v, n)| serde_json::json!({
                "c": c.to_string(),
                "S": render::rational(v),
                "N": n,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("c,S,N\n");
        for (c, v, n) in self.rows() {
            out.push_str(&format!("{c},{},{n}\n", render::rational(&v)));
        }
        out
    }
}

/// `N(c, b)`: how many arguments `d` in `[1, b - 1]` coprime to `b`
/// satisfy `S(d, b) = S(c, b)`. Counts `d = c` itself.
pub fn count_equal(c: &BigInt, b: &BigInt, sweep_bound: u64) -> Result<usize> {
    let b_small = check_sweep_bound(b, sweep_bound)?;
    let c = c.mod_floor(b);
    if !c.gcd(b).is_one() || c.is_zero() {
        return Err(Error::NotCoprime { a: c, b: b.clone() });
    }
    let target = big_s(&ArgPair::new(c, b.clone())?);
    Ok(sweep_values(b_small)
        .into_iter()
        .filter(|(_, v)| v == &target)
        .count())
}

/// Outcome of the square-free checks on one modulus.
#[derive(Debug, Clone)]
pub struct SquarefreeReport {
    pub b: BigInt,
    pub primes: Vec<BigInt>,
    pub max_n: usize,
    /// Every attained value of N(c, b), ascending.
    pub attained_n: Vec<usize>,
    /// Arguments whose N is neither 1 nor even; expected empty, reported
    /// rather than suppressed if ever found.
    pub parity_violations: Vec<BigInt>,
    /// Arguments with N > 2^r; expected empty.
    pub bound_violations: Vec<BigInt>,
}

/// Verifies `N(c, b) <= 2^r` for all arguments of a square-free `b` and
/// reports any `N` value that is neither 1 nor even.
pub fn squarefree_bound_check(
    b: &BigInt,
    sweep_bound: u64,
    factor_bound: u64,
) -> Result<SquarefreeReport> {
    let primes = factor_squarefree(b, factor_bound)?.ok_or_else(|| Error::NotSquareFree(b.clone()))?;
    let report = full_census(b, sweep_bound)?;
    let cap = 1usize << primes.len();
    let mut max_n = 0;
    let mut attained = std::collections::BTreeSet::new();
    let mut parity_violations = Vec::new();
    let mut bound_violations = Vec::new();
    for (c, _, n) in report.rows() {
        max_n = max_n.max(n);
        attained.insert(n);
        if n != 1 && n % 2 != 0 {
            parity_violations.push(c.clone());
        }
        if n > cap {
            bound_violations.push(c);
        }
    }
    Ok(SquarefreeReport {
        b: b.clone(),
        primes,
        max_n,
        attained_n: attained.into_iter().collect(),
        parity_violations,
        bound_violations,
    })
}

impl SquarefreeReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "b": self.b.to_string(),
            "primes": self.primes.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "max_n": self.max_n,
            "attained_n": self.attained_n,
            "parity_violations": self.parity_violations.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "bound_violations": self.bound_violations.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// A two-prime modulus with its least suitable set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    pub b: BigInt,
    pub p: BigInt,
    pub q: BigInt,
    pub c: BigInt,
    pub d: BigInt,
    pub common_value: BigRational,
}

impl SearchHit {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "b": self.b.to_string(),
            "p": self.p.to_string(),
            "q": self.q.to_string(),
            "c": self.c.to_string(),
            "d": self.d.to_string(),
            "value": render::rational(&self.common_value),
        })
    }
}

/// Sweeps every `b = p * q` with primes `5 <= p < q` in `[pmin, pmax]`,
/// ascending by `b`, and reports the lexicographically least suitable
/// set `(c, d)`, `c < d`, with positive common value, when one exists.
pub fn search_suitable_pairs(pmin: u64, pmax: u64, sweep_bound: u64) -> Result<Vec<SearchHit>> {
    let primes: Vec<u64> = (pmin.max(5)..=pmax)
        .filter(|&n| is_prime(&BigInt::from(n)))
        .collect();
    let mut moduli: Vec<(u64, u64, u64)> = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            moduli.push((p * q, p, q));
        }
    }
    moduli.sort_unstable();

    let mut hits = Vec::new();
    for (b, p, q) in moduli {
        let big_b = BigInt::from(b);
        check_sweep_bound(&big_b, sweep_bound)?;
        let report = full_census(&big_b, sweep_bound)?;
        let mut best: Option<(BigInt, BigInt, BigRational)> = None;
        for (value, args) in &report.classes {
            if !value.is_positive() || args.len() < 2 {
                continue;
            }
            for (i, c) in args.iter().enumerate() {
                let inv = mod_inverse(c, &big_b)?;
                for d in &args[i + 1..] {
                    if d == &inv {
                        continue;
                    }
                    let candidate = (c.clone(), d.clone(), value.clone());
                    let better = match &best {
                        None => true,
                        Some((bc, bd, _)) => (c, d) < (bc, bd),
                    };
                    if better {
                        best = Some(candidate);
                    }
                    break; // smallest d for this c within the class
                }
            }
        }
        if let Some((c, d, common_value)) = best {
            hits.push(SearchHit {
                b: big_b,
                p: BigInt::from(p),
                q: BigInt::from(q),
                c,
                d,
                common_value,
            });
        }
    }
    Ok(hits)
}

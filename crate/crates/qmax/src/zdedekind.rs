//! Ideals nZ of the integers, classified from the factorization of n.

use crate::absorbing::is_two_absorbing;
use crate::error::{invalid, Result};
use crate::ideal::Ideal;
use crate::qmax::{classify_qmax, QMaxTag};
use crate::ring::make_zmod;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegerIdeal {
    pub n: u64,
    /// (prime, exponent), primes increasing.
    pub factorization: Vec<(u64, u32)>,
    pub tag: QMaxTag,
    pub two_absorbing: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violating_triple: Option<[u64; 3]>,
}

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Least sorted triple a ≤ b ≤ c in [0, n) with n | abc and n dividing none
/// of ab, bc, ac. Divisibility by n depends on each factor only through its
/// gcd with n, and d ≤ a whenever gcd(a, n) = d, so the least triple is made
/// of divisors of n.
pub fn z_violating_triple(n: u64) -> Option<[u64; 3]> {
    let ds: Vec<u64> = divisors(n).into_iter().filter(|&d| d < n).collect();
    let div = |x: u64| x.is_multiple_of(n);
    for (ia, &a) in ds.iter().enumerate() {
        for (ib, &b) in ds.iter().enumerate().skip(ia) {
            if div(a * b) {
                continue;
            }
            for &c in &ds[ib..] {
                let abc = (a * b % n) * c;
                if div(abc) && !div(b * c) && !div(a * c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

pub fn classify_z_ideal(n: u64) -> Result<IntegerIdeal> {
    if n == 0 {
        return invalid("(0) is a non-maximal prime of Z and has no quasi-maximal type");
    }
    if n < 2 {
        return invalid("(1) is the unit ideal");
    }
    let factorization = factorize(n);
    let tag = match factorization.as_slice() {
        [(_, 1)] => QMaxTag::Inert,
        [(_, 1), (_, 1)] => QMaxTag::Decomposed,
        [(_, 2)] => QMaxTag::Ramified,
        _ => QMaxTag::NotQuasiMaximal,
    };
    let triple = z_violating_triple(n);
    Ok(IntegerIdeal { n, factorization, tag, two_absorbing: triple.is_none(), violating_triple: triple })
}

/// The factorization type of (n) against the table classification of (0)
/// in Z/n, and the 2-absorbing verdict against the table one.
pub fn z_crosscheck(n: u64) -> Result<bool> {
    let z = classify_z_ideal(n)?;
    let r = make_zmod(n as usize)?;
    let zero = Ideal::zero(&r);
    let table_tag = classify_qmax(&r, &zero)?.tag();
    let table_abs = is_two_absorbing(&r, &zero)?.two_absorbing;
    Ok(z.tag == table_tag && z.two_absorbing == table_abs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeSquareReport {
    pub bound: u64,
    pub primes: Vec<u64>,
    /// Primes p where (p²) was not ramified or disagreed with Z/p².
    pub failures: Vec<u64>,
}

impl PrimeSquareReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// (p²) is ramified for every prime p ≤ bound, by factorization and in Z/p².
pub fn prime_square_witness(bound: u64) -> Result<PrimeSquareReport> {
    if bound < 2 {
        return invalid("bound must be at least 2");
    }
    let primes: Vec<u64> = (2..=bound).filter(|&p| is_prime(p)).collect();
    let mut failures = Vec::new();
    for &p in &primes {
        let ok = classify_z_ideal(p * p)?.tag == QMaxTag::Ramified && z_crosscheck(p * p)?;
        if !ok {
            failures.push(p);
        }
    }
    Ok(PrimeSquareReport { bound, primes, failures })
}

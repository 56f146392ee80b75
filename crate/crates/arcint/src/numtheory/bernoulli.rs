//! Bernoulli numbers, exactly, under the convention t e^t / (e^t - 1).
//!
//! With this generating function B_1 = +1/2; all other indices agree with
//! the more common t / (e^t - 1) convention (odd indices >= 3 vanish, even
//! ones coincide). The cache is built once from the tangent-number triangle,
//! which needs only big-integer additions and scalar multiplications, and is
//! cross-checked in tests against the classical recurrence.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::{Error, Result};
use crate::ratio::{rat_i, Rat};

/// Large enough for ray-limit experiments at p = 5 with directions d <= 8
/// and levels k <= 3 (index d*5^k - 1 <= 999) plus the Kummer-stability
/// samples that reach one level further.
pub const DEFAULT_BERNOULLI_BOUND: usize = 1300;

pub struct BernoulliCache {
    values: Vec<Rat>,
}

impl BernoulliCache {
    /// Builds B_0 .. B_nmax.
    pub fn build(nmax: usize) -> Self {
        let tangents = tangent_numbers(nmax / 2 + 1);
        let mut values = Vec::with_capacity(nmax + 1);
        for n in 0..=nmax {
            values.push(bernoulli_from_tangent(n, &tangents));
        }
        BernoulliCache { values }
    }

    pub fn bound(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Result<&Rat> {
        self.values.get(n).ok_or(Error::IndexTooLarge {
            n,
            nmax: self.bound(),
        })
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }
}

/// Process-wide cache at the default bound; built on first use and shared.
pub fn bernoulli_cache() -> &'static BernoulliCache {
    static CACHE: OnceLock<BernoulliCache> = OnceLock::new();
    CACHE.get_or_init(|| BernoulliCache::build(DEFAULT_BERNOULLI_BOUND))
}

/// Tangent numbers T_1 .. T_m by the Seidel triangle: additions and small
/// scalar multiplications only.
fn tangent_numbers(m: usize) -> Vec<BigUint> {
    if m == 0 {
        return vec![];
    }
    let mut t: Vec<BigUint> = Vec::with_capacity(m);
    t.push(BigUint::one());
    for k in 1..m {
        t.push(&t[k - 1] * BigUint::from(k as u64));
    }
    for k in 1..m {
        for j in k..m {
            let a = &t[j - 1] * BigUint::from((j - k) as u64);
            let b = &t[j] * BigUint::from((j - k + 2) as u64);
            t[j] = a + b;
        }
    }
    t
}

/// B_n from T_(n/2): B_2m = (-1)^(m-1) * 2m * T_m / (4^m (4^m - 1)).
fn bernoulli_from_tangent(n: usize, tangents: &[BigUint]) -> Rat {
    match n {
        0 => return rat_i(1),
        1 => return Rat::new(BigInt::one(), BigInt::from(2)), // +1/2 convention
        _ if n % 2 == 1 => return rat_i(0),
        _ => {}
    }
    let m = n / 2;
    let four_m = BigInt::from(4u8).pow(m as u32);
    let denom = &four_m * (&four_m - BigInt::one());
    let numer = BigInt::from(tangents[m - 1].clone()) * BigInt::from(n as u64);
    let sign = if m % 2 == 1 { 1 } else { -1 };
    Rat::new(numer * BigInt::from(sign), denom)
}

/// Classical O(n^2) rational recurrence, used as the independent oracle in
/// tests: sum_{j<=m} C(m+1, j) B_j = m + 1 under the +1/2 convention.
pub fn naive_bernoulli(nmax: usize) -> Vec<Rat> {
    let mut b: Vec<Rat> = Vec::with_capacity(nmax + 1);
    b.push(rat_i(1));
    for m in 1..=nmax {
        let mut acc = rat_i(m as i64 + 1);
        let mut binom = BigInt::one(); // C(m+1, j) built incrementally
        for (j, bj) in b.iter().enumerate().take(m) {
            binom = if j == 0 {
                BigInt::one()
            } else {
                &binom * BigInt::from((m + 2 - j) as u64) / BigInt::from(j as u64)
            };
            acc -= Rat::from_integer(binom.clone()) * bj;
        }
        b.push(acc / rat_i(m as i64 + 1));
    }
    b
}

/// Primes q with (q - 1) | n, whose product is the denominator of B_n for
/// even n (von Staudt-Clausen).
pub fn von_staudt_clausen_denominator(n: usize) -> BigUint {
    assert!(n >= 2 && n % 2 == 0);
    let mut d = BigUint::one();
    for q in 2..=(n as u64 + 1) {
        if n as u64 % (q - 1) == 0 && is_small_prime(q) {
            d *= BigUint::from(q);
        }
    }
    d
}

fn is_small_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat;
    use num_traits::Signed;

    #[test]
    fn small_values() {
        let c = BernoulliCache::build(16);
        assert_eq!(c.get(0).unwrap(), &rat_i(1));
        assert_eq!(c.get(1).unwrap(), &rat(1, 2));
        assert_eq!(c.get(2).unwrap(), &rat(1, 6));
        assert_eq!(c.get(3).unwrap(), &rat_i(0));
        assert_eq!(c.get(4).unwrap(), &rat(-1, 30));
        assert_eq!(c.get(12).unwrap(), &rat(-691, 2730));
    }

    #[test]
    fn matches_classical_recurrence() {
        let c = BernoulliCache::build(100);
        let naive = naive_bernoulli(100);
        for n in 0..=100 {
            assert_eq!(c.get(n).unwrap(), &naive[n], "B_{}", n);
        }
    }

    #[test]
    fn von_staudt_clausen_denominators() {
        let c = BernoulliCache::build(120);
        for n in (2..=120).step_by(2) {
            let expected = von_staudt_clausen_denominator(n);
            let got = c.get(n).unwrap().denom().abs().to_biguint().unwrap();
            assert_eq!(got, expected, "denominator of B_{}", n);
        }
        assert_eq!(von_staudt_clausen_denominator(12), BigUint::from(2730u32));
    }

    #[test]
    fn out_of_range_reported() {
        let c = BernoulliCache::build(10);
        assert!(matches!(c.get(11), Err(Error::IndexTooLarge { .. })));
    }
}

//! Binomial coefficients: exact big integers where that is cheap, and
//! valuation + unit modulo p^N everywhere else.
//!
//! The modular path splits C(n, k) as p^v * u where v counts the base-p
//! carries in k + (n - k) and u comes from p-removed factorials
//! (n!)_p = prod_{i <= n, p not| i} i, taken modulo p^N along the chain
//! n, n/p, n/p^2, ... Both paths agree; tests compare them up to n = 1e5.

use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::padic::{PadicContext, PadicNumber};
use crate::ratio::mod_inverse;

/// Below this n the exact big-integer product is microseconds; above it the
/// modular path is used.
pub const EXACT_BINOMIAL_LIMIT: u64 = 512;

/// Hard cap on the p-removed factorial table, a memory guard.
const TABLE_LIMIT: usize = 1 << 21;

/// Base-p digit sum.
fn digit_sum(mut n: u64, p: u64) -> u64 {
    let mut s = 0;
    while n > 0 {
        s += n % p;
        n /= p;
    }
    s
}

/// v_p(C(n, k)) by Kummer's theorem: the number of carries when adding k
/// and n - k in base p, i.e. (S(k) + S(n-k) - S(n)) / (p - 1).
pub fn binomial_valuation(n: u64, k: u64, p: u64) -> u32 {
    assert!(k <= n, "binomial with k <= n");
    ((digit_sum(k, p) + digit_sum(n - k, p) - digit_sum(n, p)) / (p - 1)) as u32
}

/// Exact C(n, k) by the multiplicative formula.
pub fn binomial_exact(n: u64, k: u64) -> BigUint {
    assert!(k <= n);
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Reusable per-(p, N) binomial evaluator with a growing table of p-removed
/// factorial units. Interior mutability keeps the public methods `&self`;
/// concurrent queries are safe and deterministic.
pub struct BinomTable {
    ctx: PadicContext,
    modulus: BigUint,
    /// fac[x] = prod_{i <= x, p not| i} i  (mod p^N)
    fac: Mutex<Vec<BigUint>>,
}

impl BinomTable {
    pub fn new(ctx: PadicContext) -> Self {
        BinomTable {
            ctx,
            modulus: ctx.p_pow(ctx.precision()),
            fac: Mutex::new(vec![BigUint::one()]),
        }
    }

    pub fn context(&self) -> PadicContext {
        self.ctx
    }

    fn ensure(&self, upto: u64) -> Result<()> {
        if upto as usize >= TABLE_LIMIT {
            return Err(Error::TermBudgetExceeded(upto));
        }
        let mut fac = self.fac.lock().unwrap();
        let have = fac.len();
        if (upto as usize) < have {
            return Ok(());
        }
        fac.reserve(upto as usize + 1 - have);
        let p = self.ctx.p();
        for x in have as u64..=upto {
            let prev = fac.last().unwrap().clone();
            let next = if x % p == 0 {
                prev
            } else {
                (prev * BigUint::from(x)) % &self.modulus
            };
            fac.push(next);
        }
        Ok(())
    }

    /// Unit part of n! modulo p^N (n below p^N, which always holds here).
    fn factorial_unit(&self, n: u64) -> Result<BigUint> {
        self.ensure(n)?;
        let fac = self.fac.lock().unwrap();
        let p = self.ctx.p();
        let mut acc = BigUint::one();
        let mut m = n;
        while m > 0 {
            acc = (acc * &fac[m as usize]) % &self.modulus;
            m /= p;
        }
        Ok(acc)
    }

    /// C(n, k) as a p-adic number at full working precision.
    pub fn binomial(&self, n: u64, k: u64) -> Result<PadicNumber> {
        assert!(k <= n);
        if n <= EXACT_BINOMIAL_LIMIT {
            let exact = binomial_exact(n, k);
            return Ok(PadicNumber::from_bigint(
                self.ctx,
                &num_bigint::BigInt::from(exact),
            ));
        }
        let val = binomial_valuation(n, k, self.ctx.p()) as i64;
        let num = self.factorial_unit(n)?;
        let den = (self.factorial_unit(k)? * self.factorial_unit(n - k)?) % &self.modulus;
        let inv = mod_inverse(&den, &self.modulus).expect("p-removed factorial is a unit");
        let unit = (num * inv) % &self.modulus;
        Ok(PadicNumber::from_unit_parts(
            self.ctx,
            val,
            unit,
            self.ctx.precision() as i64,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuation_examples() {
        for p in [3u64, 5, 7, 11] {
            assert_eq!(binomial_valuation(p, 1, p), 1);
        }
        // C(9,4) = 126 = 2 * 3^2 * 7
        assert_eq!(binomial_valuation(9, 4, 5), 0);
        assert_eq!(binomial_valuation(9, 4, 3), 2);
        assert_eq!(binomial_valuation(9, 4, 7), 1);
    }

    #[test]
    fn valuation_agrees_with_factorization() {
        for n in 0..200u64 {
            for k in 0..=n {
                let exact = binomial_exact(n, k);
                for p in [3u64, 5, 7] {
                    let v = crate::ratio::int_valuation(p, &num_bigint::BigInt::from(exact.clone()))
                        .unwrap();
                    assert_eq!(binomial_valuation(n, k, p) as u64, v, "C({},{}) at p={}", n, k, p);
                }
            }
        }
    }

    #[test]
    fn binomial_mod_small_cases() {
        let ctx = PadicContext::new(5, 6).unwrap();
        let t = BinomTable::new(ctx);
        assert!(t.binomial(17, 0).unwrap().is_one());
        let c = t.binomial(9, 4).unwrap();
        assert_eq!(c, PadicNumber::from_integer(ctx, 126));
    }

    #[test]
    fn modular_path_matches_exact_path() {
        let ctx = PadicContext::new(5, 20).unwrap();
        let t = BinomTable::new(ctx);
        // straddle the threshold and go well past it, including samples
        // around 1e5 where the exact path is still tolerable in a test
        let samples: &[(u64, u64)] = &[
            (500, 137),
            (513, 200),
            (700, 350),
            (2001, 1000),
            (90_000, 1234),
            (100_000, 777),
        ];
        for &(n, k) in samples {
            let exact = binomial_exact(n, k);
            let expected = PadicNumber::from_bigint(ctx, &num_bigint::BigInt::from(exact));
            let modular = {
                // force the modular route even under the threshold
                let val = binomial_valuation(n, k, 5) as i64;
                let num = t.factorial_unit(n).unwrap();
                let den =
                    (t.factorial_unit(k).unwrap() * t.factorial_unit(n - k).unwrap()) % &t.modulus;
                let inv = mod_inverse(&den, &t.modulus).unwrap();
                PadicNumber::from_unit_parts(ctx, val, (num * inv) % &t.modulus, 20)
            };
            assert_eq!(modular, expected, "C({}, {})", n, k);
        }
    }

    #[test]
    fn kummer_style_lemma_samples() {
        // if n + 1 is not divisible by p^t then v_p(C(n, j*p^bigN - 1)) > bigN - t
        for p in [3u64, 5, 7] {
            for big_n in 2..4u32 {
                for j in 1..4u64 {
                    for n in (j * p.pow(big_n) - 1)..(j * p.pow(big_n) + 40) {
                        let k = j * p.pow(big_n) - 1;
                        if k > n {
                            continue;
                        }
                        let t = crate::ratio::int_valuation(p, &num_bigint::BigInt::from(n + 1))
                            .unwrap_or(0) as u32
                            + 1; // n+1 not divisible by p^t
                        let v = binomial_valuation(n, k, p);
                        assert!(
                            v as i64 > big_n as i64 - t as i64,
                            "p={} N={} n={} j={}",
                            p,
                            big_n,
                            n,
                            j
                        );
                    }
                }
            }
        }
    }
}

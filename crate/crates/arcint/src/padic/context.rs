use num_bigint::BigUint;

use crate::error::{Error, Result};

/// The ambient field Q_p together with the working precision.
///
/// `precision` is the number of base-p digits every value is stored modulo;
/// p must be an odd prime. Contexts are tiny and `Copy`, so they are embedded
/// in every value and shared freely between threads.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PadicContext {
    p: u64,
    precision: u32,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PadicContext {
    /// Odd primes only; p = 2 needs sign conventions this crate does not carry.
    pub fn new(p: u64, precision: u32) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::InvalidPrime { p });
        }
        if precision == 0 {
            return Err(Error::InvalidPrecision);
        }
        Ok(PadicContext { p, precision })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// Same prime, different working precision.
    pub fn with_precision(&self, precision: u32) -> Result<Self> {
        PadicContext::new(self.p, precision)
    }

    pub fn p_big(&self) -> BigUint {
        BigUint::from(self.p)
    }

    /// p^e for moderate e.
    pub fn p_pow(&self, e: u32) -> BigUint {
        self.p_big().pow(e)
    }
}

//! Small helpers around exact rational numbers.
//!
//! `Rat` is the exact ground field for the cyclotomic oracle and for every
//! input the CLI accepts. `num_rational::BigRational` already keeps values
//! reduced with a positive denominator, which is exactly the invariant we
//! need.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// p-adic valuation of a nonzero integer.
pub fn int_valuation(p: u64, n: &BigInt) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut v = 0u64;
    let mut m = n.abs();
    loop {
        let (q, r) = num_integer::Integer::div_rem(&m, &p);
        if r.is_zero() {
            v += 1;
            m = q;
        } else {
            return Some(v);
        }
    }
}

/// p-adic valuation of a nonzero rational.
pub fn rat_valuation(p: u64, q: &Rat) -> Option<i64> {
    if q.is_zero() {
        return None;
    }
    let vn = int_valuation(p, q.numer()).unwrap() as i64;
    let vd = int_valuation(p, q.denom()).unwrap() as i64;
    Some(vn - vd)
}

/// Extended gcd on unsigned big integers: returns x with a*x = 1 (mod m).
pub fn mod_inverse(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    let (mut old_r, mut r) = (BigInt::from(a.clone()), BigInt::from(m.clone()));
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    while !r.is_zero() {
        let q = &old_r / &r;
        let tmp_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, tmp_r);
        let tmp_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, tmp_s);
    }
    if !old_r.is_one() {
        return None;
    }
    let m_int = BigInt::from(m.clone());
    let mut x = old_s % &m_int;
    if x.is_negative() {
        x += &m_int;
    }
    Some(x.to_biguint().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuations() {
        assert_eq!(int_valuation(3, &BigInt::from(7 * 7 * 7 * 5 * 9)), Some(2));
        assert_eq!(int_valuation(7, &BigInt::from(0)), None);
        assert_eq!(rat_valuation(5, &rat(10, 3)), Some(1));
        assert_eq!(rat_valuation(5, &rat(3, 25)), Some(-2));
    }

    #[test]
    fn inverse_mod_prime_power() {
        let m = BigUint::from(5u32).pow(6);
        let a = BigUint::from(1234u32);
        let inv = mod_inverse(&a, &m).unwrap();
        assert_eq!((a * inv) % &m, BigUint::from(1u32));
        assert!(mod_inverse(&BigUint::from(5u32), &m).is_none());
    }
}

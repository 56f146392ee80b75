//! Exact evaluation of the defining level sums over Q(zeta_{p^m}).
//!
//! The level-m sum of f on the arc with circle center a and basepoint b is
//!
//! ```text
//!   p^-m * sum_{zeta^(p^m) = 1} (x - a) f(x),    x = a + (b - a) zeta.
//! ```
//!
//! Substituting x = a + (b - a) t turns the summand into G(t) / Qt(t) with
//! G = (b - a) t * Pt(t). For each sub-level l <= m the inverse of Qt modulo
//! the p^l-th cyclotomic polynomial inverts Qt at every point of exact order
//! p^l, and evaluating a polynomial at zeta^s is just an exponent remap. The
//! full sum is assembled in the level-m power basis and must come out
//! rational by Galois stability.

use num_bigint::BigInt;
use num_traits::Zero;

use super::cyclotomic::{bezout_inverse, cyclotomic_polynomial};
use super::qpoly::{QPoly, RationalFunction};
use crate::error::{Error, Result};
use crate::ratio::{rat_i, Rat};

/// Default cap on p^m; the sum costs O(p^m) cyclotomic term products.
pub const DEFAULT_ENUMERATION_CAP: u64 = 250;

pub fn exact_level_sum(
    f: &RationalFunction,
    a: &Rat,
    b: &Rat,
    p: u64,
    m: u32,
    cap: u64,
) -> Result<Rat> {
    exact_level_sum_with_root(f, a, b, p, m, cap, 1)
}

/// Same sum with the primitive root zeta^generator in place of zeta; any
/// generator coprime to p yields the same rational value (Galois
/// stability), which tests assert.
pub fn exact_level_sum_with_root(
    f: &RationalFunction,
    a: &Rat,
    b: &Rat,
    p: u64,
    m: u32,
    cap: u64,
    generator: u64,
) -> Result<Rat> {
    assert!(m >= 1, "level must be positive");
    assert!(generator % p != 0, "generator must be coprime to p");
    assert!(a != b, "arc needs distinct center and basepoint");
    let pm_big = BigInt::from(p).pow(m);
    let pm = match u64::try_from(&pm_big) {
        Ok(v) if v <= cap => v,
        Ok(v) => return Err(Error::LevelTooLarge { pm: v, cap }),
        Err(_) => {
            return Err(Error::LevelTooLarge {
                pm: u64::MAX,
                cap,
            })
        }
    };

    let span = b - a; // b - a
    let ft = f.compose_affine(a, &span); // f(a + (b-a) t)
    let numer = QPoly::x().mul(ft.numerator()).scale(&span); // (b-a) t Pt(t)
    let denom = ft.denominator().clone();

    // inverse of the denominator at each exact order p^l
    let mut inverses: Vec<Vec<Rat>> = Vec::with_capacity(m as usize + 1);
    for l in 0..=m {
        let modulus = cyclotomic_polynomial(p, l);
        let reduced = denom.div_rem(&modulus).1;
        let inv = bezout_inverse(&reduced, &modulus).ok_or(Error::PoleOnSampleSet { level: l })?;
        inverses.push(inv.coeffs().to_vec());
    }

    let g_coeffs: Vec<(usize, Rat)> = numer
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect();

    // accumulate in the level-m power basis, exponents already mod p^m
    let mut acc = vec![rat_i(0); pm as usize];
    for r in 1..=pm {
        let mut v = 0u32;
        let mut rr = r;
        while rr % p == 0 {
            v += 1;
            rr /= p;
        }
        let level = m - v.min(m);
        let s = (r % pm).wrapping_mul(generator % pm) % pm;
        let inv = &inverses[level as usize];
        for (i, gi) in &g_coeffs {
            for (j, cj) in inv.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                let e = ((*i as u64 + j as u64) % pm).wrapping_mul(s) % pm;
                acc[e as usize] += gi * cj;
            }
        }
    }

    // reduce modulo the p^m-th cyclotomic polynomial
    let q = if m >= 1 { p.pow(m - 1) as usize } else { 1 };
    let deg = q * (p as usize - 1);
    for e in (deg..acc.len()).rev() {
        if acc[e].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut acc[e], rat_i(0));
        for i in 0..(p as usize - 1) {
            acc[e - deg + i * q] -= &c;
        }
    }

    // Galois-stable, hence rational
    for (e, c) in acc.iter().enumerate().take(deg).skip(1) {
        assert!(
            c.is_zero(),
            "level sum failed to be rational (coefficient at zeta^{})",
            e
        );
    }
    Ok(acc[0].clone() / Rat::from_integer(pm_big))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat;

    fn one_over_x_minus(x0: i64) -> RationalFunction {
        RationalFunction::new(QPoly::one(), QPoly::new(vec![rat_i(-x0), rat_i(1)]))
    }

    #[test]
    fn constants_sum_to_zero() {
        let f = RationalFunction::from_poly(QPoly::constant(rat(7, 3)));
        for (p, m) in [(3u64, 1u32), (3, 2), (5, 1), (5, 2)] {
            let s = exact_level_sum(&f, &rat_i(0), &rat_i(1), p, m, 250).unwrap();
            assert_eq!(s, rat_i(0));
        }
    }

    #[test]
    fn boundary_pole_closed_form() {
        // f = 1/(x - 3) on a = 0, b = 1 at p = 5, m = 1: the level sum is
        // 1/(1 - c^(p^m)) with c = (a - x0)/(a - b) = 3
        let f = one_over_x_minus(3);
        let s = exact_level_sum(&f, &rat_i(0), &rat_i(1), 5, 1, 250).unwrap();
        assert_eq!(s, rat(1, 1 - 243)); // -1/242
        // and at m = 2: 1/(1 - 3^25)
        let s2 = exact_level_sum(&f, &rat_i(0), &rat_i(1), 5, 2, 250).unwrap();
        let c25 = Rat::from_integer(BigInt::from(3).pow(25));
        assert_eq!(s2, rat_i(1) / (rat_i(1) - c25));
    }

    #[test]
    fn closed_form_for_various_poles() {
        // same identity for several rational pole positions
        for (x0, p, m) in [(2i64, 3u64, 2u32), (7, 5, 2), (4, 7, 1)] {
            let f = one_over_x_minus(x0);
            let a = rat_i(0);
            let b = rat_i(1);
            let s = exact_level_sum(&f, &a, &b, p, m, 250).unwrap();
            let c = (a.clone() - rat_i(x0)) / (a - b);
            let cpow = num_traits::pow::pow(c, p.pow(m) as usize);
            assert_eq!(s, rat_i(1) / (rat_i(1) - cpow), "x0={} p={} m={}", x0, p, m);
        }
    }

    #[test]
    fn low_degree_polynomials_vanish() {
        // polynomials of degree < p^m - 1 sum to zero
        let f = RationalFunction::from_poly(QPoly::from_ints(&[4, -1, 2, 0, 3]));
        let s = exact_level_sum(&f, &rat_i(2), &rat(1, 3), 3, 2, 250).unwrap();
        assert_eq!(s, rat_i(0));
    }

    #[test]
    fn x_squared_at_small_level() {
        // sum of zeta^3 over cube roots of unity is 3, so the level sum is 1
        let f = RationalFunction::from_poly(QPoly::from_ints(&[0, 0, 1]));
        let s = exact_level_sum(&f, &rat_i(0), &rat_i(1), 3, 1, 250).unwrap();
        assert_eq!(s, rat_i(1));
    }

    #[test]
    fn galois_stability() {
        let f = RationalFunction::new(
            QPoly::from_ints(&[1, 0, 1]),
            QPoly::from_ints(&[-3, 1]),
        );
        for g in [2u64, 4, 7] {
            let s1 = exact_level_sum(&f, &rat_i(0), &rat_i(1), 5, 2, 250).unwrap();
            let s2 = exact_level_sum_with_root(&f, &rat_i(0), &rat_i(1), 5, 2, 250, g).unwrap();
            assert_eq!(s1, s2, "generator {}", g);
        }
    }

    #[test]
    fn pole_on_sample_set_detected() {
        // pole at the basepoint itself (the zeta = 1 sample)
        let f = one_over_x_minus(1);
        let err = exact_level_sum(&f, &rat_i(0), &rat_i(1), 5, 1, 250);
        assert!(matches!(err, Err(Error::PoleOnSampleSet { .. })));
    }

    #[test]
    fn enumeration_cap_enforced() {
        let f = one_over_x_minus(3);
        let err = exact_level_sum(&f, &rat_i(0), &rat_i(1), 5, 4, 250);
        assert!(matches!(err, Err(Error::LevelTooLarge { pm: 625, cap: 250 })));
    }
}

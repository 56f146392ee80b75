//! Partial-fraction expansion of rational functions over Q_p, and the
//! coefficient oracle it induces about an arc basepoint.
//!
//! Denominator roots are located exactly: rational roots (any multiplicity)
//! come from the rational root theorem, the remaining factor must be
//! squarefree and is split by Hensel lifting from simple roots modulo p.
//! Anything we cannot certify to lie in Q_p is rejected rather than
//! approximated.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::arc::CircleArc;
use super::function::{Certificate, SeriesFunction, Support};
use super::ppoly::PPoly;
use crate::error::{Error, Result};
use crate::numtheory::binomial_exact;
use crate::oracle::qpoly::{QPoly, RationalFunction};
use crate::padic::{PadicContext, PadicNumber, Valuation};
use crate::ratio::{rat_i, Rat};

/// One pole with its partial-fraction numerators: sum_s coeffs[s-1] / (x - location)^s.
#[derive(Clone, Debug)]
pub struct PoleTerm {
    pub location: PadicNumber,
    pub coeffs: Vec<PadicNumber>,
}

impl PoleTerm {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Residue: the coefficient of 1/(x - location).
    pub fn residue(&self) -> &PadicNumber {
        &self.coeffs[0]
    }
}

/// f = poly_part(about center) + sum of pole terms.
#[derive(Clone, Debug)]
pub struct RationalExpansion {
    pub center: PadicNumber,
    pub poly_part: PPoly,
    pub poles: Vec<PoleTerm>,
    pub(crate) inv_spans: Vec<PadicNumber>, // 1/(location - center) per pole
}

impl RationalExpansion {
    pub fn new(center: PadicNumber, poly_part: PPoly, poles: Vec<PoleTerm>) -> Result<Self> {
        let mut inv_spans = Vec::with_capacity(poles.len());
        for pole in &poles {
            let span = pole.location.try_sub(&center)?;
            inv_spans.push(PadicNumber::one(center.context()).try_div(&span)?);
        }
        Ok(RationalExpansion {
            center,
            poly_part,
            poles,
            inv_spans,
        })
    }

    /// Coefficient of (x - center)^n: the geometric expansion of each pole
    /// term plus the polynomial part.
    ///
    /// 1/(x - rho)^s = (-1)^s sum_n C(n+s-1, s-1) (x - b)^n / (rho - b)^(n+s)
    pub fn coeff(&self, n: u64) -> PadicNumber {
        let ctx = self.center.context();
        let mut acc = self.poly_part.coeff(n as usize);
        for (pole, inv_span) in self.poles.iter().zip(&self.inv_spans) {
            for (idx, a_s) in pole.coeffs.iter().enumerate() {
                if a_s.is_zero() {
                    continue;
                }
                let s = idx as u64 + 1;
                let binom = binomial_exact(n + s - 1, s - 1);
                let binom = PadicNumber::from_bigint(ctx, &BigInt::from(binom));
                let sign = if s % 2 == 1 { -1i64 } else { 1 };
                let sign = PadicNumber::from_integer(ctx, sign);
                let pw = inv_span
                    .try_pow(&BigUint::from(n + s))
                    .expect("span power");
                let term = a_s
                    .try_mul(&binom)
                    .and_then(|t| t.try_mul(&sign))
                    .and_then(|t| t.try_mul(&pw))
                    .expect("pole term");
                acc = acc.try_add(&term).expect("coefficient sum");
            }
        }
        acc
    }

    /// Direct evaluation at a point away from all poles.
    pub fn eval(&self, x: &PadicNumber) -> Result<PadicNumber> {
        let mut acc = self
            .poly_part
            .eval(&x.try_sub(&self.center)?)?;
        for pole in &self.poles {
            let d = x.try_sub(&pole.location)?;
            let mut pw = PadicNumber::one(x.context());
            for a_s in &pole.coeffs {
                pw = pw.try_div(&d)?;
                acc = acc.try_add(&a_s.try_mul(&pw)?)?;
            }
        }
        Ok(acc)
    }
}

pub(crate) fn embed_qpoly(ctx: PadicContext, q: &QPoly) -> PPoly {
    PPoly::new(
        ctx,
        q.coeffs()
            .iter()
            .map(|c| PadicNumber::from_rational(ctx, c))
            .collect(),
    )
}

impl SeriesFunction {
    /// Expand a rational function about the arc basepoint. Poles must stay
    /// out of the arc and lie in Q_p; the result carries a boundedness
    /// certificate.
    pub fn from_rational(f: &RationalFunction, arc: &CircleArc) -> Result<SeriesFunction> {
        let exp = expand_rational(f, arc)?;
        let ctx = arc.context();
        let cert = rational_certificate(&exp, arc);
        let support = if exp.poles.is_empty() {
            Support::Polynomial(exp.poly_part.degree().unwrap_or(0) as u64)
        } else {
            Support::Dense
        };
        let _ = ctx;
        Ok(SeriesFunction::from_rational_expansion(exp)
            .with_certificate(cert)
            .with_support(support))
    }
}

/// Locate all poles in Q_p, split off the polynomial part, and compute the
/// partial-fraction numerators.
pub(crate) fn expand_rational(
    f: &RationalFunction,
    arc: &CircleArc,
) -> Result<RationalExpansion> {
    let ctx = arc.context();
    let b = arc.basepoint().clone();
    let den = f.denominator();
    let num = f.numerator();

    // polynomial part
    let (quot, rem) = num.div_rem(den);
    let poly_part = embed_qpoly(ctx, &quot).recenter(&b)?;

    if den.degree().unwrap_or(0) == 0 {
        return RationalExpansion::new(b, poly_part, vec![]);
    }

    // rational roots with multiplicity, then Hensel roots of the rest
    let rational_roots = den.rational_roots();
    let mut cofactor = den.clone();
    for (root, mult) in &rational_roots {
        let lin = QPoly::new(vec![-root.clone(), rat_i(1)]);
        for _ in 0..*mult {
            let (q, r) = cofactor.div_rem(&lin);
            debug_assert!(r.is_zero());
            cofactor = q;
        }
    }
    let hensel = if cofactor.degree().unwrap_or(0) > 0 {
        let g = cofactor.gcd(&cofactor.derivative());
        if g.degree().unwrap_or(0) > 0 {
            return Err(Error::IrrationalPole(
                "repeated non-rational factor in the denominator".into(),
            ));
        }
        let roots = hensel_roots(ctx, &cofactor)?;
        if roots.len() < cofactor.degree().unwrap() {
            return Err(Error::IrrationalPole(format!(
                "only {} of {} remaining denominator roots lift to Q_p",
                roots.len(),
                cofactor.degree().unwrap()
            )));
        }
        roots
    } else {
        vec![]
    };

    // arc membership check for every pole
    let mut poles: Vec<PoleTerm> = Vec::new();
    for (root, mult) in &rational_roots {
        let loc = PadicNumber::from_rational(ctx, root);
        if arc.contains(&loc)? {
            return Err(Error::PoleInArc(format!("{}", loc)));
        }
        poles.push(PoleTerm {
            location: loc,
            coeffs: rational_pole_numerators(ctx, &rem, den, root, *mult),
        });
    }
    for root in hensel {
        if arc.contains(&root)? {
            return Err(Error::PoleInArc(format!("{}", root)));
        }
        // simple pole: residue = rem(rho) / den'(rho)
        let n_at = embed_qpoly(ctx, &rem).eval(&root)?;
        let d_at = embed_qpoly(ctx, &den.derivative()).eval(&root)?;
        poles.push(PoleTerm {
            coeffs: vec![n_at.try_div(&d_at)?],
            location: root,
        });
    }

    RationalExpansion::new(b, poly_part, poles)
}

/// Exact Taylor coefficients of rem / (den / (x-root)^mult) at the root give
/// the numerators A_mult, .., A_1.
fn rational_pole_numerators(
    ctx: PadicContext,
    rem: &QPoly,
    den: &QPoly,
    root: &Rat,
    mult: usize,
) -> Vec<PadicNumber> {
    let lin = QPoly::new(vec![-root.clone(), rat_i(1)]);
    let mut cof = den.clone();
    for _ in 0..mult {
        cof = cof.div_rem(&lin).0;
    }
    // shift both to the root: g(u) = poly(root + u)
    let shift = QPoly::new(vec![root.clone(), rat_i(1)]);
    let n_taylor = rem.compose(&shift);
    let d_taylor = cof.compose(&shift);
    // series-divide to order mult
    let d0 = d_taylor.coeff(0);
    debug_assert!(!d0.is_zero());
    let mut h: Vec<Rat> = Vec::with_capacity(mult);
    for t in 0..mult {
        let mut acc = n_taylor.coeff(t);
        for (j, hj) in h.iter().enumerate() {
            acc -= hj * &d_taylor.coeff(t - j);
        }
        h.push(acc / &d0);
    }
    // A_s = h_(mult - s): coeffs[s-1] = A_s
    let mut out = vec![PadicNumber::zero(ctx); mult];
    for (t, ht) in h.iter().enumerate() {
        out[mult - 1 - t] = PadicNumber::from_rational(ctx, ht);
    }
    out
}

/// Simple roots of a rational-root-free squarefree polynomial in Q_p, by
/// Hensel lifting from residues mod p; |x| > 1 roots come from the reversed
/// polynomial.
fn hensel_roots(ctx: PadicContext, poly: &QPoly) -> Result<Vec<PadicNumber>> {
    let p = ctx.p();
    // clear denominators to a primitive integer polynomial
    let mut lcm = BigInt::one();
    for c in poly.coeffs() {
        lcm = num_integer::Integer::lcm(&lcm, c.denom());
    }
    let ints: Vec<BigInt> = poly
        .coeffs()
        .iter()
        .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
        .collect();

    let mut out = Vec::new();
    // unit-range and small roots: residues 0..p-1
    for c in 0..p {
        if let Some(root) = lift_simple_root(ctx, &ints, c)? {
            out.push(root);
        }
    }
    // |x| > 1 roots: y = 1/x with y = 0 mod p on the reversed polynomial
    let rev: Vec<BigInt> = ints.iter().rev().cloned().collect();
    if let Some(y) = lift_simple_root(ctx, &rev, 0)? {
        if !y.is_zero() {
            out.push(PadicNumber::one(ctx).try_div(&y)?);
        }
    }
    Ok(out)
}

fn eval_int_poly_mod(coeffs: &[BigInt], x: &BigUint, m: &BigUint) -> BigUint {
    let mi = BigInt::from(m.clone());
    let xi = BigInt::from(x.clone());
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = (acc * &xi + c) % &mi;
    }
    if acc.is_negative() {
        acc += &mi;
    }
    acc.to_biguint().unwrap()
}

/// Newton-lift the residue c when it is a simple root mod p; None when it is
/// not a root, Err-free "not simple" cases simply yield None as well (the
/// caller counts roots and rejects what it cannot certify).
fn lift_simple_root(ctx: PadicContext, coeffs: &[BigInt], c: u64) -> Result<Option<PadicNumber>> {
    let p = BigUint::from(ctx.p());
    let x0 = BigUint::from(c);
    if !eval_int_poly_mod(coeffs, &x0, &p).is_zero() {
        return Ok(None);
    }
    let deriv: Vec<BigInt> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, a)| a * BigInt::from(i as u64))
        .collect();
    if eval_int_poly_mod(&deriv, &x0, &p).is_zero() {
        return Ok(None); // not simple mod p; cannot certify here
    }
    let modulus = ctx.p_pow(ctx.precision());
    let mut x = x0;
    // Newton converges quadratically; a few extra rounds cost nothing
    for _ in 0..(64 - (ctx.precision() as u64).leading_zeros() + 3) {
        let fx = eval_int_poly_mod(coeffs, &x, &modulus);
        if fx.is_zero() {
            break;
        }
        let dfx = eval_int_poly_mod(&deriv, &x, &modulus);
        let inv = crate::ratio::mod_inverse(&(dfx % &modulus), &modulus)
            .expect("derivative is a unit at a simple root");
        let delta = (fx * inv) % &modulus;
        x = (&x + &modulus - delta) % &modulus;
    }
    debug_assert!(eval_int_poly_mod(coeffs, &x, &modulus).is_zero());
    Ok(Some(PadicNumber::from_bigint(ctx, &BigInt::from(x))))
}

/// Boundedness certificate for a rational expansion on the arc.
fn rational_certificate(exp: &RationalExpansion, arc: &CircleArc) -> Certificate {
    let s = arc.radius_valuation();
    let mut worst = f64::MIN;
    for (n, c) in exp.poly_part.coeffs().iter().enumerate() {
        if let Valuation::Finite(v) = c.valuation() {
            worst = worst.max(-(v as f64) - (n as i64 * s) as f64);
        }
    }
    for pole in &exp.poles {
        let d = pole
            .location
            .try_sub(&exp.center)
            .expect("pole distance")
            .valuation_floor();
        for (idx, a_s) in pole.coeffs.iter().enumerate() {
            if let Valuation::Finite(v) = a_s.valuation() {
                let srank = idx as i64 + 1;
                worst = worst.max(-(v as f64) - (srank * d) as f64);
            }
        }
    }
    if worst == f64::MIN {
        worst = 0.0;
    }
    Certificate::bounded(worst + 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat;

    fn ctx() -> PadicContext {
        PadicContext::new(5, 18).unwrap()
    }

    fn unit_arc(c: PadicContext) -> CircleArc {
        CircleArc::new(
            PadicNumber::from_integer(c, 0),
            PadicNumber::from_integer(c, 1),
        )
        .unwrap()
    }

    fn simple_pole(x0: i64) -> RationalFunction {
        RationalFunction::new(QPoly::one(), QPoly::new(vec![rat_i(-x0), rat_i(1)]))
    }

    #[test]
    fn geometric_expansion_of_simple_pole() {
        let c = ctx();
        let arc = unit_arc(c);
        let f = SeriesFunction::from_rational(&simple_pole(3), &arc).unwrap();
        // 1/(x-3) about b=1: c_0 = 1/(1-3) = -1/2, c_n = -1/2^(n+1)
        assert_eq!(
            f.coeff(0),
            PadicNumber::from_rational(c, &rat(-1, 2))
        );
        for n in 1..12u64 {
            let expected = PadicNumber::from_rational(c, &(-rat(1, 2i64.pow(n as u32 + 1))));
            assert_eq!(f.coeff(n), expected, "c_{}", n);
        }
        assert!(f.certificate().unwrap().is_bounded());
    }

    #[test]
    fn polynomial_inputs_have_finite_support() {
        let c = ctx();
        let arc = unit_arc(c);
        let f = RationalFunction::from_poly(QPoly::from_ints(&[0, 0, 1])); // x^2
        let s = SeriesFunction::from_rational(&f, &arc).unwrap();
        // about b = 1: (1 + u)^2 = 1 + 2u + u^2
        assert_eq!(s.coeff(0), PadicNumber::from_integer(c, 1));
        assert_eq!(s.coeff(1), PadicNumber::from_integer(c, 2));
        assert_eq!(s.coeff(2), PadicNumber::from_integer(c, 1));
        assert!(s.coeff(3).is_zero());
        assert_eq!(s.next_support(3), None);
    }

    #[test]
    fn mixed_function_splits_into_parts() {
        let c = ctx();
        let arc = unit_arc(c);
        // (x^2 + 1)/(x - 3) = (x + 3) + 10/(x - 3)
        let f = RationalFunction::new(QPoly::from_ints(&[1, 0, 1]), QPoly::from_ints(&[-3, 1]));
        let s = SeriesFunction::from_rational(&f, &arc).unwrap();
        let exp = s.rational_parts().unwrap();
        assert_eq!(exp.poles.len(), 1);
        assert_eq!(
            exp.poles[0].residue(),
            &PadicNumber::from_integer(c, 10)
        );
        // c_0 = f(1) = 2/(-2) = -1
        assert_eq!(s.coeff(0), PadicNumber::from_integer(c, -1));
        // spot-check a few coefficients against (x+3) + 10/(x-3) expanded
        let g = SeriesFunction::from_rational(&simple_pole(3), &arc).unwrap();
        for n in 2..8u64 {
            let expected = g.coeff(n).try_mul(&PadicNumber::from_integer(c, 10)).unwrap();
            assert_eq!(s.coeff(n), expected, "c_{}", n);
        }
    }

    #[test]
    fn double_pole_partial_fractions() {
        let c = ctx();
        let arc = unit_arc(c);
        // 1/(x-3)^2
        let den = QPoly::from_ints(&[-3, 1]).mul(&QPoly::from_ints(&[-3, 1]));
        let f = RationalFunction::new(QPoly::one(), den);
        let s = SeriesFunction::from_rational(&f, &arc).unwrap();
        let exp = s.rational_parts().unwrap();
        assert_eq!(exp.poles[0].order(), 2);
        assert!(exp.poles[0].coeffs[0].is_zero()); // no simple part
        assert!(exp.poles[0].coeffs[1].is_one());
        // c_n = (n+1)/(3-1)^(n+2) * (-1)^2... check against direct values
        // 1/(x-3)^2 about 1: sum (n+1) u^n / 2^(n+2)
        for n in 0..6u64 {
            let expected =
                PadicNumber::from_rational(c, &rat(n as i64 + 1, 2i64.pow(n as u32 + 2)));
            assert_eq!(s.coeff(n), expected, "c_{}", n);
        }
    }

    #[test]
    fn hensel_poles_from_teichmuller_roots() {
        let c = ctx();
        let arc = unit_arc(c);
        // 1 - x^4 splits over Q_5 into Teichmüller roots; 1/(1-x^4) has
        // simple poles at the four fourth roots of unity
        let f = RationalFunction::new(QPoly::one(), QPoly::from_ints(&[1, 0, 0, 0, -1]));
        let err = SeriesFunction::from_rational(&f, &arc);
        // pole at x = 1 is the basepoint: inside the arc
        assert!(matches!(err, Err(Error::PoleInArc(_))));

        // every unit residue meets some fourth root of unity mod 5, so use
        // the radius-1/5 arc at b = 5: all four roots are then exterior
        let arc2 = CircleArc::new(
            PadicNumber::from_integer(c, 0),
            PadicNumber::from_integer(c, 5),
        )
        .unwrap();
        let s = SeriesFunction::from_rational(&f, &arc2).unwrap();
        let exp = s.rational_parts().unwrap();
        assert_eq!(exp.poles.len(), 4);
        // each root satisfies r^4 = 1
        for pole in &exp.poles {
            assert!(pole.location.pow_u64(4).is_one());
        }
    }

    #[test]
    fn irrational_poles_rejected() {
        let c = ctx();
        let arc = unit_arc(c);
        // x^2 - 2 has no roots in Q_5 (2 is not a square mod 5)
        let f = RationalFunction::new(QPoly::one(), QPoly::from_ints(&[-2, 0, 1]));
        assert!(matches!(
            SeriesFunction::from_rational(&f, &arc),
            Err(Error::IrrationalPole(_))
        ));
    }

    #[test]
    fn exterior_pole_via_reversed_polynomial() {
        let c = ctx();
        // 1/(5x^2 - x + 1): one unit root congruent to 1 mod 5 (kept off the
        // arc by basing at 2) and one irrational root of valuation -1 that
        // only the reversed-polynomial lift can reach
        let arc = CircleArc::new(
            PadicNumber::from_integer(c, 0),
            PadicNumber::from_integer(c, 2),
        )
        .unwrap();
        let f = RationalFunction::new(QPoly::one(), QPoly::from_ints(&[1, -1, 5]));
        let s = SeriesFunction::from_rational(&f, &arc).unwrap();
        let exp = s.rational_parts().unwrap();
        assert_eq!(exp.poles.len(), 2);
        let mut vals: Vec<_> = exp
            .poles
            .iter()
            .map(|p| p.location.valuation())
            .collect();
        vals.sort_by_key(|v| match v {
            Valuation::Finite(x) => *x,
            Valuation::Infinite => i64::MAX,
        });
        assert_eq!(vals, vec![Valuation::Finite(-1), Valuation::Finite(0)]);
        // direct evaluation: f(7) = 1/(5*49 - 7 + 1) = 1/239
        let v = exp.eval(&PadicNumber::from_integer(c, 7)).unwrap();
        assert_eq!(v, PadicNumber::from_rational(c, &rat(1, 239)));
    }

    #[test]
    fn expansion_evaluates_like_the_function() {
        let c = ctx();
        let arc = unit_arc(c);
        let f = RationalFunction::new(
            QPoly::from_ints(&[2, 1, 1]),
            QPoly::from_ints(&[-3, 1]).mul(&QPoly::from_ints(&[-7, 1])),
        );
        let s = SeriesFunction::from_rational(&f, &arc).unwrap();
        let exp = s.rational_parts().unwrap();
        for x in [1i64, 6, 11, -4] {
            let expected = f.eval(&rat_i(x)).unwrap();
            let got = exp.eval(&PadicNumber::from_integer(c, x)).unwrap();
            assert_eq!(got, PadicNumber::from_rational(c, &expected), "x = {}", x);
        }
    }
}

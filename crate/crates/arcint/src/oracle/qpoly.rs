//! Dense polynomials and rational functions over Q.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::ratio::{rat_i, Rat};

/// Polynomial with exact rational coefficients, lowest degree first, no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QPoly {
    coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly::constant(rat_i(1))
    }

    pub fn constant(c: Rat) -> Self {
        QPoly::new(vec![c])
    }

    pub fn x() -> Self {
        QPoly::new(vec![rat_i(0), rat_i(1)])
    }

    /// a_0 + a_1 x + ... from integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly::new(coeffs.iter().map(|&c| rat_i(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(|| rat_i(0))
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        QPoly::new(out)
    }

    pub fn neg(&self) -> Self {
        QPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![rat_i(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![rat_i(0); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / &lead;
            quot[i - dd] = q.clone();
            for (j, c) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                let delta = c * &q;
                rem[idx] -= delta;
            }
        }
        (QPoly::new(quot), QPoly::new(rem))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_i(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = rat_i(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// f(g(x)).
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = QPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&QPoly::constant(c.clone()));
        }
        acc
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => QPoly::zero(),
            Some(l) => self.scale(&(rat_i(1) / l.clone())),
        }
    }

    /// Rational roots with multiplicities, by the rational root theorem on
    /// the primitive integer form.
    pub fn rational_roots(&self) -> Vec<(Rat, usize)> {
        if self.is_zero() || self.degree() == Some(0) {
            return vec![];
        }
        // clear denominators
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = num_integer::Integer::lcm(&lcm, c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
            .collect();
        // strip powers of x
        let shift = ints.iter().position(|c| !c.is_zero()).unwrap();
        let mut candidates: Vec<Rat> = Vec::new();
        if shift > 0 {
            candidates.push(rat_i(0));
        }
        let tail: Vec<BigInt> = ints[shift..].to_vec();
        let a0 = tail[0].abs();
        let lead = tail.last().unwrap().abs();
        for num in divisors(&a0) {
            for den in divisors(&lead) {
                let cand = Rat::new(num.clone(), den.clone());
                candidates.push(cand.clone());
                candidates.push(-cand);
            }
        }
        candidates.sort();
        candidates.dedup();
        let mut out = Vec::new();
        let mut f = self.clone();
        for cand in candidates {
            let mut mult = 0;
            while !f.is_zero() && f.eval(&cand).is_zero() {
                let lin = QPoly::new(vec![-cand.clone(), rat_i(1)]);
                let (q, r) = f.div_rem(&lin);
                debug_assert!(r.is_zero());
                f = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((cand, mult));
            }
        }
        out
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut out = vec![];
    let mut d = BigInt::one();
    // trial division is fine at desk scale; inputs stay small
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            out.push(n / &d);
        }
        d += 1;
    }
    out
}

/// A quotient of polynomials over Q, kept gcd-reduced with a monic
/// denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: QPoly,
    den: QPoly,
}

impl RationalFunction {
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let g = num.gcd(&den);
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        } else {
            (num, den)
        };
        // normalize so the denominator is monic
        let lead = den.leading().unwrap().clone();
        RationalFunction {
            num: num.scale(&(rat_i(1) / lead.clone())),
            den: den.scale(&(rat_i(1) / lead)),
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RationalFunction {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalFunction::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFunction::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        let n = self.num.derivative().mul(&self.den);
        let m = self.num.mul(&self.den.derivative());
        RationalFunction::new(n.sub(&m), self.den.mul(&self.den))
    }

    /// f'/f for nonzero f.
    pub fn log_derivative(&self) -> Self {
        assert!(!self.is_zero());
        self.derivative().mul(&RationalFunction::new(
            self.den.clone(),
            self.num.clone(),
        ))
    }

    /// f(c + s x) as a rational function of x.
    pub fn compose_affine(&self, c: &Rat, s: &Rat) -> Self {
        let inner = QPoly::new(vec![c.clone(), s.clone()]);
        RationalFunction::new(self.num.compose(&inner), self.den.compose(&inner))
    }

    /// f(g(x)) for polynomial g.
    pub fn compose_poly(&self, g: &QPoly) -> Self {
        RationalFunction::new(self.num.compose(g), self.den.compose(g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat;

    #[test]
    fn division_with_remainder() {
        // (x^3 - 1) / (x - 1) = x^2 + x + 1
        let f = QPoly::from_ints(&[-1, 0, 0, 1]);
        let g = QPoly::from_ints(&[-1, 1]);
        let (q, r) = f.div_rem(&g);
        assert!(r.is_zero());
        assert_eq!(q, QPoly::from_ints(&[1, 1, 1]));
    }

    #[test]
    fn composes_and_evaluates() {
        let f = QPoly::from_ints(&[1, 0, 1]); // 1 + x^2
        let g = QPoly::from_ints(&[2, 3]); // 2 + 3x
        let h = f.compose(&g);
        assert_eq!(h.eval(&rat_i(1)), f.eval(&rat_i(5)));
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // (x - 2)^2 (2x + 1)
        let f = QPoly::from_ints(&[-2, 1])
            .mul(&QPoly::from_ints(&[-2, 1]))
            .mul(&QPoly::from_ints(&[1, 2]));
        let roots = f.rational_roots();
        assert!(roots.contains(&(rat_i(2), 2)));
        assert!(roots.contains(&(rat(-1, 2), 1)));
    }

    #[test]
    fn log_derivative_counts_zeros() {
        // f = (x-1)(x-2): f'/f = 1/(x-1) + 1/(x-2)
        let f = RationalFunction::from_poly(QPoly::from_ints(&[-1, 1]).mul(&QPoly::from_ints(&[-2, 1])));
        let ld = f.log_derivative();
        let expect = RationalFunction::new(
            QPoly::from_ints(&[-3, 2]),
            QPoly::from_ints(&[-1, 1]).mul(&QPoly::from_ints(&[-2, 1])),
        );
        assert_eq!(ld, expect);
    }

    #[test]
    fn gcd_reduction_in_constructor() {
        let f = RationalFunction::new(
            QPoly::from_ints(&[-1, 0, 1]), // x^2 - 1
            QPoly::from_ints(&[-1, 1]),    // x - 1
        );
        assert_eq!(f.numerator(), &QPoly::from_ints(&[1, 1]));
        assert_eq!(f.denominator(), &QPoly::one());
    }
}

//! Krasner analytic functions on discs with holes, at desk scale: a
//! holomorphic part plus finitely many Laurent tails. Uniform limits of
//! rational functions always decompose this way; keeping the tails finite
//! makes every instance integrable in closed form, and the uniform-limit
//! property is then a theorem to test rather than a representation burden.

use crate::error::Result;
use crate::padic::{PadicContext, PadicNumber};

use super::ppoly::PPoly;

/// sum_{n >= 1} coeffs[n-1] / (x - center)^n on |x - center|_p >= inner
/// radius.
#[derive(Clone, Debug)]
pub struct LaurentTail {
    pub center: PadicNumber,
    pub coeffs: Vec<PadicNumber>,
    /// rho with inner radius p^(-rho): the tail converges outside this disc
    pub inner_radius_val: i64,
}

impl LaurentTail {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of 1/(x - center).
    pub fn residue(&self) -> PadicNumber {
        self.coeffs
            .first()
            .cloned()
            .unwrap_or_else(|| PadicNumber::zero(self.center.context()))
    }

    pub fn eval(&self, x: &PadicNumber) -> Result<PadicNumber> {
        let d = x.try_sub(&self.center)?;
        let mut acc = PadicNumber::zero(x.context());
        let mut pw = PadicNumber::one(x.context());
        for c in &self.coeffs {
            pw = pw.try_div(&d)?;
            acc = acc.try_add(&c.try_mul(&pw)?)?;
        }
        Ok(acc)
    }
}

/// holo + sum of tails.
#[derive(Clone, Debug)]
pub struct KrasnerFunction {
    pub holo: PPoly,
    pub tails: Vec<LaurentTail>,
}

impl KrasnerFunction {
    pub fn holomorphic(holo: PPoly) -> Self {
        KrasnerFunction {
            holo,
            tails: vec![],
        }
    }

    pub fn with_tail(mut self, tail: LaurentTail) -> Self {
        self.tails.push(tail);
        self
    }

    pub fn context(&self) -> PadicContext {
        self.holo.context()
    }

    pub fn eval(&self, x: &PadicNumber) -> Result<PadicNumber> {
        let mut acc = self.holo.eval(x)?;
        for t in &self.tails {
            acc = acc.try_add(&t.eval(x)?)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::PadicContext;

    #[test]
    fn evaluation_combines_parts() {
        let ctx = PadicContext::new(5, 14).unwrap();
        let f = KrasnerFunction::holomorphic(PPoly::from_ints(ctx, &[1, 1])).with_tail(
            LaurentTail {
                center: PadicNumber::from_integer(ctx, 0),
                coeffs: vec![PadicNumber::from_integer(ctx, 2)],
                inner_radius_val: 0,
            },
        );
        // f(x) = 1 + x + 2/x at x = 2: 3 + 1 = 4
        let v = f.eval(&PadicNumber::from_integer(ctx, 2)).unwrap();
        assert_eq!(v, PadicNumber::from_integer(ctx, 4));
    }
}

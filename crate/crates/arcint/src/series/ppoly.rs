//! Dense polynomials with p-adic coefficients.

use crate::error::Result;
use crate::padic::{PadicContext, PadicNumber};

#[derive(Clone, Debug)]
pub struct PPoly {
    ctx: PadicContext,
    coeffs: Vec<PadicNumber>, // lowest first, no trailing zeros-to-precision
}

impl PPoly {
    pub fn new(ctx: PadicContext, mut coeffs: Vec<PadicNumber>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        PPoly { ctx, coeffs }
    }

    pub fn zero(ctx: PadicContext) -> Self {
        PPoly { ctx, coeffs: vec![] }
    }

    pub fn constant(c: PadicNumber) -> Self {
        let ctx = c.context();
        PPoly::new(ctx, vec![c])
    }

    pub fn from_ints(ctx: PadicContext, ints: &[i64]) -> Self {
        PPoly::new(
            ctx,
            ints.iter()
                .map(|&n| PadicNumber::from_integer(ctx, n))
                .collect(),
        )
    }

    pub fn context(&self) -> PadicContext {
        self.ctx
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

    pub fn coeff(&self, i: usize) -> PadicNumber {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| PadicNumber::zero(self.ctx))
    }

    pub fn coeffs(&self) -> &[PadicNumber] {
        &self.coeffs
    }

    pub fn eval(&self, x: &PadicNumber) -> Result<PadicNumber> {
        let mut acc = PadicNumber::zero(self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc.try_mul(x)?.try_add(c)?;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).try_add(&other.coeff(i))?);
        }
        Ok(PPoly::new(self.ctx, out))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(PPoly::zero(self.ctx));
        }
        let mut out = vec![PadicNumber::zero(self.ctx); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].try_add(&a.try_mul(b)?)?;
            }
        }
        Ok(PPoly::new(self.ctx, out))
    }

    pub fn scale(&self, c: &PadicNumber) -> Result<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.try_mul(c)?);
        }
        Ok(PPoly::new(self.ctx, out))
    }

    pub fn derivative(&self) -> Result<Self> {
        if self.coeffs.len() <= 1 {
            return Ok(PPoly::zero(self.ctx));
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.try_mul(&PadicNumber::from_integer(self.ctx, i as i64))?);
        }
        Ok(PPoly::new(self.ctx, out))
    }

    /// Taylor shift: coefficients of f(center + u) as a polynomial in u,
    /// by repeated synthetic division by (x - center).
    pub fn recenter(&self, center: &PadicNumber) -> Result<Self> {
        let mut work = self.coeffs.clone();
        let mut out = Vec::with_capacity(work.len());
        while !work.is_empty() {
            // Horner pass: tops = [b_d, b_(d-1), .., b_0] with b_0 the
            // remainder and b_d..b_1 the quotient (highest first)
            let mut tops: Vec<PadicNumber> = Vec::with_capacity(work.len());
            let mut carry = PadicNumber::zero(self.ctx);
            for a in work.iter().rev() {
                carry = carry.try_mul(center)?.try_add(a)?;
                tops.push(carry.clone());
            }
            let rem = tops.pop().expect("nonempty");
            out.push(rem);
            tops.reverse();
            work = tops;
        }
        Ok(PPoly::new(self.ctx, out))
    }
}

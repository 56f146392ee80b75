//! The Teichmüller character on the closed unit disc of Q_p.
//!
//! For a unit x, ω(x) is the unique (p-1)-th root of unity congruent to x
//! mod p; for |x|_p < 1 we extend by ω(x) = 0. The computation iterates
//! x -> x^p, which is eventually constant modulo p^A.

use num_bigint::BigUint;

use super::context::PadicContext;
use super::number::{PadicNumber, Valuation};
use crate::error::{Error, Result};

impl PadicNumber {
    /// ω(x). Requires |x|_p <= 1.
    pub fn teichmuller(&self) -> Result<PadicNumber> {
        match self.valuation() {
            Valuation::Infinite => Ok(PadicNumber::zero(self.context())),
            Valuation::Finite(v) if v > 0 => Ok(PadicNumber::zero(self.context())),
            Valuation::Finite(v) if v < 0 => Err(Error::NormTooLarge { valuation: v }),
            _ => {
                let ctx = self.context();
                let rel = (self.precision()) as u32; // val = 0, so rel = prec
                let m = ctx.p_pow(rel);
                let p = BigUint::from(ctx.p());
                let mut u = self.unit_part().expect("unit").clone() % &m;
                // x^(p^k) stabilizes mod p^rel after at most rel steps
                for _ in 0..=rel {
                    let next = u.modpow(&p, &m);
                    if next == u {
                        break;
                    }
                    u = next;
                }
                debug_assert_eq!(u.modpow(&p, &m), u);
                Ok(PadicNumber::from_unit_parts(ctx, 0, u, self.precision()))
            }
        }
    }

    /// ω(x)^(p^α). Because every Teichmüller value in Q_p has order dividing
    /// p - 1 and p ≡ 1 (mod p-1), this equals ω(x) for every α; the exponent
    /// reduction is still carried out honestly.
    pub fn teichmuller_pow(&self, alpha: u32) -> Result<PadicNumber> {
        let w = self.teichmuller()?;
        if w.is_zero() {
            return Ok(w);
        }
        let p = self.context().p();
        let order_bound = p - 1;
        let mut e: u64 = 1;
        for _ in 0..alpha {
            e = (e * (p % order_bound)) % order_bound;
        }
        if e == 0 {
            e = order_bound;
        }
        Ok(w.pow_u64(e))
    }
}

/// Teichmüller lift of a residue class c in {0, .., p-1}.
pub fn teichmuller_lift(ctx: PadicContext, c: u64) -> PadicNumber {
    PadicNumber::from_integer(ctx, (c % ctx.p()) as i64)
        .teichmuller()
        .expect("residue is integral")
}

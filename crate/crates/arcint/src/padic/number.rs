use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::context::PadicContext;
use crate::error::{Error, Result};
use crate::ratio::{int_valuation, mod_inverse, Rat};

/// p-adic valuation; `Infinite` means "zero to the stated precision".
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

#[derive(Clone, Debug)]
enum Repr {
    /// value = 0 + O(p^prec)
    Zero { prec: i64 },
    /// value = p^val * unit + O(p^prec), with p ∤ unit and 1 <= unit < p^(prec-val)
    Unit { val: i64, unit: BigUint, prec: i64 },
}

/// A truncated element of Q_p.
///
/// Arithmetic panics on context mismatch, on division by a value that is
/// indistinguishable from zero, and when a result would retain no significant
/// digits; the `try_*` variants report those conditions as errors instead.
#[derive(Clone, Debug)]
pub struct PadicNumber {
    ctx: PadicContext,
    repr: Repr,
}

impl PadicNumber {
    // ---- constructors ----

    pub fn zero(ctx: PadicContext) -> Self {
        PadicNumber {
            ctx,
            repr: Repr::Zero {
                prec: ctx.precision() as i64,
            },
        }
    }

    pub fn one(ctx: PadicContext) -> Self {
        Self::from_integer(ctx, 1)
    }

    /// 0 + O(p^prec): zero known only modulo p^prec.
    pub fn zero_to_precision(ctx: PadicContext, prec: i64) -> Self {
        let prec = prec.min(ctx.precision() as i64);
        PadicNumber {
            ctx,
            repr: Repr::Zero { prec },
        }
    }

    pub fn from_integer(ctx: PadicContext, n: i64) -> Self {
        Self::from_bigint(ctx, &BigInt::from(n))
    }

    pub fn from_bigint(ctx: PadicContext, n: &BigInt) -> Self {
        let prec = ctx.precision() as i64;
        if n.is_zero() {
            return Self::zero(ctx);
        }
        let v = int_valuation(ctx.p(), n).unwrap() as i64;
        if v >= prec {
            return Self::zero(ctx);
        }
        let unit_int = n / BigInt::from(ctx.p_pow(v as u32));
        let rel = (prec - v) as u32;
        let m = BigInt::from(ctx.p_pow(rel));
        let mut u = unit_int % &m;
        if u.is_negative() {
            u += &m;
        }
        PadicNumber {
            ctx,
            repr: Repr::Unit {
                val: v,
                unit: u.to_biguint().unwrap(),
                prec,
            },
        }
    }

    /// Exact embedding of a rational, to full working precision.
    pub fn from_rational(ctx: PadicContext, q: &Rat) -> Self {
        if q.is_zero() {
            return Self::zero(ctx);
        }
        let p = ctx.p();
        let vn = int_valuation(p, q.numer()).unwrap() as i64;
        let vd = int_valuation(p, q.denom()).unwrap() as i64;
        let val = vn - vd;
        let prec = ctx.precision() as i64;
        if val >= prec {
            return Self::zero(ctx);
        }
        let rel = (prec - val) as u32;
        let m = ctx.p_pow(rel);
        let num_unit = (q.numer() / BigInt::from(ctx.p_pow(vn as u32))).abs();
        let den_unit = (q.denom() / BigInt::from(ctx.p_pow(vd as u32)))
            .to_biguint()
            .unwrap();
        let num_res = num_unit.to_biguint().unwrap() % &m;
        let den_inv = mod_inverse(&(den_unit % &m), &m).expect("denominator unit is invertible");
        let mut u = (num_res * den_inv) % &m;
        if q.numer().is_negative() {
            u = (&m - &u) % &m;
        }
        Self::from_unit_parts(ctx, val, u, prec)
    }

    /// p^e, exact to working precision.
    pub fn p_power(ctx: PadicContext, e: i64) -> Self {
        let prec = (ctx.precision() as i64).min(i64::MAX);
        if e >= prec {
            return Self::zero(ctx);
        }
        PadicNumber {
            ctx,
            repr: Repr::Unit {
                val: e,
                unit: BigUint::one(),
                prec,
            },
        }
    }

    /// Normalizes `p^val_offset * residue + O(p^prec)` where `residue` is
    /// taken modulo p^(prec - val_offset).
    pub(crate) fn from_unit_parts(
        ctx: PadicContext,
        val_offset: i64,
        residue: BigUint,
        prec: i64,
    ) -> Self {
        let prec = prec.min(ctx.precision() as i64);
        if prec <= val_offset {
            return PadicNumber {
                ctx,
                repr: Repr::Zero { prec },
            };
        }
        let rel = (prec - val_offset) as u32;
        let m = ctx.p_pow(rel);
        let r = residue % &m;
        if r.is_zero() {
            return PadicNumber {
                ctx,
                repr: Repr::Zero { prec },
            };
        }
        let shift = int_valuation(ctx.p(), &BigInt::from(r.clone())).unwrap() as i64;
        let val = val_offset + shift;
        let unit = r / ctx.p_pow(shift as u32);
        let unit = unit % ctx.p_pow((prec - val) as u32);
        PadicNumber {
            ctx,
            repr: Repr::Unit { val, unit, prec },
        }
    }

    // ---- accessors ----

    pub fn context(&self) -> PadicContext {
        self.ctx
    }

    pub fn valuation(&self) -> Valuation {
        match &self.repr {
            Repr::Zero { .. } => Valuation::Infinite,
            Repr::Unit { val, .. } => Valuation::Finite(*val),
        }
    }

    /// Lower bound on the valuation: exact for nonzero values, the known
    /// precision for zero-to-precision ones. This is the workhorse behind
    /// every "agrees to d digits" assertion.
    pub fn valuation_floor(&self) -> i64 {
        match &self.repr {
            Repr::Zero { prec } => *prec,
            Repr::Unit { val, .. } => *val,
        }
    }

    /// Absolute precision: the value is known modulo p^A.
    pub fn precision(&self) -> i64 {
        match &self.repr {
            Repr::Zero { prec } | Repr::Unit { prec, .. } => *prec,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero { .. })
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Unit { val: 0, unit, .. } => unit.is_one(),
            _ => false,
        }
    }

    /// Unit part as a big integer (absent for zero).
    pub fn unit_part(&self) -> Option<&BigUint> {
        match &self.repr {
            Repr::Zero { .. } => None,
            Repr::Unit { unit, .. } => Some(unit),
        }
    }

    /// Base-p digits of the unit part, lowest first.
    pub fn unit_digits(&self) -> Vec<u64> {
        match &self.repr {
            Repr::Zero { .. } => vec![],
            Repr::Unit { val, unit, prec } => {
                let mut digits = Vec::with_capacity((prec - val) as usize);
                let p = self.ctx.p_big();
                let mut u = unit.clone();
                for _ in 0..(prec - val) {
                    let (q, r) = num_integer::Integer::div_rem(&u, &p);
                    digits.push(r.to_u64().unwrap());
                    u = q;
                }
                digits
            }
        }
    }

    /// Residue of the value modulo p^e, for 0 <= e <= precision and
    /// valuation >= 0.
    pub fn residue_mod(&self, e: u32) -> BigUint {
        assert!((e as i64) <= self.precision(), "residue beyond precision");
        match &self.repr {
            Repr::Zero { .. } => BigUint::zero(),
            Repr::Unit { val, unit, .. } => {
                assert!(*val >= 0, "residue of a non-integral value");
                if *val >= e as i64 {
                    return BigUint::zero();
                }
                (unit * self.ctx.p_pow(*val as u32)) % self.ctx.p_pow(e)
            }
        }
    }

    /// First base-p digit of the unit, i.e. the residue class of the unit
    /// part mod p. Zero for zero-to-precision values.
    pub fn leading_digit(&self) -> u64 {
        match &self.repr {
            Repr::Zero { .. } => 0,
            Repr::Unit { unit, .. } => (unit % self.ctx.p_big()).to_u64().unwrap(),
        }
    }

    /// True when both values agree modulo p^digits.
    pub fn agrees_mod(&self, other: &Self, digits: i64) -> bool {
        self.try_sub(other)
            .map(|d| d.valuation_floor() >= digits)
            .unwrap_or(false)
    }

    /// Valuation floor of the difference; large values mean close agreement.
    pub fn residual_valuation(&self, other: &Self) -> i64 {
        self.try_sub(other).map(|d| d.valuation_floor()).unwrap_or(i64::MIN)
    }

    // ---- arithmetic ----

    fn check_ctx(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    fn guard(x: PadicNumber) -> Result<PadicNumber> {
        if x.precision() <= 0 {
            return Err(Error::PrecisionExhausted {
                precision: x.precision(),
            });
        }
        Ok(x)
    }

    pub fn try_add(&self, other: &Self) -> Result<PadicNumber> {
        self.check_ctx(other)?;
        let ctx = self.ctx;
        let prec = self.precision().min(other.precision());
        let out = match (&self.repr, &other.repr) {
            (Repr::Zero { .. }, Repr::Zero { .. }) => PadicNumber {
                ctx,
                repr: Repr::Zero { prec },
            },
            (Repr::Zero { .. }, Repr::Unit { val, unit, .. })
            | (Repr::Unit { val, unit, .. }, Repr::Zero { .. }) => {
                Self::from_unit_parts(ctx, *val, unit.clone(), prec)
            }
            (
                Repr::Unit {
                    val: v1, unit: u1, ..
                },
                Repr::Unit {
                    val: v2, unit: u2, ..
                },
            ) => {
                let v0 = (*v1).min(*v2);
                if v0 >= prec {
                    PadicNumber {
                        ctx,
                        repr: Repr::Zero { prec },
                    }
                } else {
                    let m = ctx.p_pow((prec - v0) as u32);
                    let a = (u1 * ctx.p_pow((v1 - v0) as u32)) % &m;
                    let b = (u2 * ctx.p_pow((v2 - v0) as u32)) % &m;
                    Self::from_unit_parts(ctx, v0, (a + b) % &m, prec)
                }
            }
        };
        Self::guard(out)
    }

    pub fn try_neg(&self) -> Result<PadicNumber> {
        let ctx = self.ctx;
        match &self.repr {
            Repr::Zero { .. } => Ok(self.clone()),
            Repr::Unit { val, unit, prec } => {
                let m = ctx.p_pow((prec - val) as u32);
                Ok(PadicNumber {
                    ctx,
                    repr: Repr::Unit {
                        val: *val,
                        unit: (&m - unit) % &m,
                        prec: *prec,
                    },
                })
            }
        }
    }

    pub fn try_sub(&self, other: &Self) -> Result<PadicNumber> {
        self.try_add(&other.try_neg()?)
    }

    pub fn try_mul(&self, other: &Self) -> Result<PadicNumber> {
        self.check_ctx(other)?;
        let ctx = self.ctx;
        let out = match (&self.repr, &other.repr) {
            (Repr::Zero { prec: a }, Repr::Zero { prec: b }) => {
                PadicNumber {
                    ctx,
                    repr: Repr::Zero {
                        prec: (a + b).min(ctx.precision() as i64),
                    },
                }
            }
            (Repr::Zero { prec }, Repr::Unit { val, .. })
            | (Repr::Unit { val, .. }, Repr::Zero { prec }) => PadicNumber {
                ctx,
                repr: Repr::Zero {
                    prec: (prec + val).min(ctx.precision() as i64),
                },
            },
            (
                Repr::Unit {
                    val: v1,
                    unit: u1,
                    prec: p1,
                },
                Repr::Unit {
                    val: v2,
                    unit: u2,
                    prec: p2,
                },
            ) => {
                let rel = (p1 - v1).min(p2 - v2);
                let val = v1 + v2;
                let prec = val + rel;
                let m = ctx.p_pow(rel as u32);
                Self::from_unit_parts(ctx, val, (u1 % &m) * (u2 % &m), prec)
            }
        };
        Self::guard(out)
    }

    pub fn try_div(&self, other: &Self) -> Result<PadicNumber> {
        self.check_ctx(other)?;
        let ctx = self.ctx;
        let (v2, u2, rel2) = match &other.repr {
            Repr::Zero { prec } => {
                return Err(Error::DivisionByZero { precision: *prec });
            }
            Repr::Unit { val, unit, prec } => (*val, unit, prec - val),
        };
        let out = match &self.repr {
            Repr::Zero { prec } => PadicNumber {
                ctx,
                repr: Repr::Zero { prec: prec - v2 },
            },
            Repr::Unit {
                val: v1,
                unit: u1,
                prec: p1,
            } => {
                let rel = (p1 - v1).min(rel2);
                let val = v1 - v2;
                let m = ctx.p_pow(rel as u32);
                let inv = mod_inverse(&(u2 % &m), &m).expect("unit is invertible");
                Self::from_unit_parts(ctx, val, (u1 % &m) * inv, val + rel)
            }
        };
        Self::guard(out)
    }

    pub fn try_inv(&self) -> Result<PadicNumber> {
        Self::one(self.ctx).try_div(self)
    }

    /// Integer power with a possibly huge exponent. Relative precision is
    /// preserved; the absolute precision follows the shifted valuation and
    /// saturates to an exact zero when it leaves the working window.
    pub fn try_pow(&self, e: &BigUint) -> Result<PadicNumber> {
        let ctx = self.ctx;
        if e.is_zero() {
            return Ok(Self::one(ctx));
        }
        match &self.repr {
            Repr::Zero { prec } => {
                let total = BigUint::from(*prec as u64) * e;
                let prec = total
                    .to_u64()
                    .map(|t| (t as i64).min(ctx.precision() as i64))
                    .unwrap_or(ctx.precision() as i64);
                Ok(PadicNumber {
                    ctx,
                    repr: Repr::Zero { prec },
                })
            }
            Repr::Unit { val, unit, prec } => {
                let rel = prec - val;
                // val * e, watching for the working window
                let val_e: i64 = if *val == 0 {
                    0
                } else {
                    let mag = BigUint::from(val.unsigned_abs()) * e;
                    match mag.to_u64() {
                        Some(m) if m < i64::MAX as u64 => {
                            if *val > 0 {
                                m as i64
                            } else {
                                -(m as i64)
                            }
                        }
                        _ => {
                            if *val > 0 {
                                return Ok(Self::zero(ctx));
                            }
                            return Err(Error::PrecisionExhausted { precision: i64::MIN });
                        }
                    }
                };
                if val_e >= ctx.precision() as i64 {
                    return Ok(Self::zero(ctx));
                }
                let m = ctx.p_pow(rel as u32);
                let u = unit.modpow(e, &m);
                Self::guard(Self::from_unit_parts(ctx, val_e, u, val_e + rel))
            }
        }
    }

    pub fn pow_u64(&self, e: u64) -> PadicNumber {
        self.try_pow(&BigUint::from(e)).expect("power in range")
    }

    pub fn try_pow_i64(&self, e: i64) -> Result<PadicNumber> {
        if e >= 0 {
            self.try_pow(&BigUint::from(e as u64))
        } else {
            self.try_pow(&BigUint::from(e.unsigned_abs()))?.try_inv()
        }
    }

    /// Forget digits beyond p^prec.
    pub fn truncate_to(&self, prec: i64) -> PadicNumber {
        let prec = prec.min(self.precision());
        match &self.repr {
            Repr::Zero { .. } => PadicNumber {
                ctx: self.ctx,
                repr: Repr::Zero { prec },
            },
            Repr::Unit { val, unit, .. } => {
                Self::from_unit_parts(self.ctx, *val, unit.clone(), prec)
            }
        }
    }
}

// Panicking operator impls for reference operands; the try_* methods carry
// the same semantics with errors instead.
macro_rules! ops_impl {
    ($trait:ident, $method:ident, $try:ident) => {
        impl std::ops::$trait for &PadicNumber {
            type Output = PadicNumber;
            fn $method(self, rhs: &PadicNumber) -> PadicNumber {
                self.$try(rhs).expect(concat!("p-adic ", stringify!($method)))
            }
        }
    };
}
ops_impl!(Add, add, try_add);
ops_impl!(Sub, sub, try_sub);
ops_impl!(Mul, mul, try_mul);
ops_impl!(Div, div, try_div);

impl std::ops::Neg for &PadicNumber {
    type Output = PadicNumber;
    fn neg(self) -> PadicNumber {
        self.try_neg().expect("p-adic neg")
    }
}

/// Equality is agreement at the smaller of the two known precisions, so a
/// zero-to-precision value compares equal to exact zero.
impl PartialEq for PadicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.ctx != other.ctx {
            return false;
        }
        let prec = self.precision().min(other.precision());
        self.agrees_mod(other, prec)
    }
}

impl fmt::Display for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Zero { prec } => write!(f, "0 (mod {}^{})", self.ctx.p(), prec),
            Repr::Unit { val, prec, .. } => {
                let digits = self.unit_digits();
                let mut first = true;
                for (i, d) in digits.iter().enumerate() {
                    if *d == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    let e = val + i as i64;
                    match e.cmp(&0) {
                        Ordering::Equal => write!(f, "{}", d)?,
                        Ordering::Greater if e == 1 => write!(f, "{}*{}", d, self.ctx.p())?,
                        _ => write!(f, "{}*{}^{}", d, self.ctx.p(), e)?,
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                write!(f, " (mod {}^{})", self.ctx.p(), prec)
            }
        }
    }
}

impl PadicNumber {
    /// Compact one-line form `val:<v>;digits:[d0,d1,...]`.
    pub fn compact(&self) -> String {
        match &self.repr {
            Repr::Zero { prec } => format!("val:inf;digits:[];prec:{}", prec),
            Repr::Unit { val, prec, .. } => {
                let ds: Vec<String> = self.unit_digits().iter().map(|d| d.to_string()).collect();
                format!("val:{};digits:[{}];prec:{}", val, ds.join(","), prec)
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PadicJson {
    p: u64,
    valuation: Option<i64>,
    digits: Vec<u64>,
    precision: i64,
}

impl Serialize for PadicNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let j = PadicJson {
            p: self.ctx.p(),
            valuation: match self.valuation() {
                Valuation::Finite(v) => Some(v),
                Valuation::Infinite => None,
            },
            digits: self.unit_digits(),
            precision: self.precision(),
        };
        j.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PadicNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PadicJson::deserialize(d)?;
        let n = j.precision.max(1) as u32;
        let ctx = PadicContext::new(j.p, n).map_err(|e| D::Error::custom(e.to_string()))?;
        match j.valuation {
            None => Ok(PadicNumber::zero_to_precision(ctx, j.precision)),
            Some(v) => {
                let mut unit = BigUint::zero();
                for d in j.digits.iter().rev() {
                    unit = unit * ctx.p_big() + BigUint::from(*d);
                }
                Ok(PadicNumber::from_unit_parts(ctx, v, unit, j.precision))
            }
        }
    }
}

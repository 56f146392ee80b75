//! The builtin function library.
//!
//! All of these live on a radius-1 arc at basepoint 0 (the arc written
//! A(1,0), or any unit center): the series coefficients are intrinsic to
//! the function and the arc only has to be compatible.

use num_bigint::BigInt;
use num_traits::One;

use super::arc::CircleArc;
use super::function::{Certificate, SeriesFunction, Support};
use super::path::PathSequence;
use crate::error::{Error, Result};
use crate::numtheory::bernoulli_cache;
use crate::padic::{PadicContext, PadicNumber};
use crate::ratio::{rat_i, rat_valuation, Rat};

fn require_unit_arc_at_zero(arc: &CircleArc, name: &str) -> Result<()> {
    if !arc.basepoint().is_zero() || arc.radius_valuation() != 0 {
        return Err(Error::IncompatibleArc {
            name: name.into(),
            why: "defined on a radius-1 arc with basepoint 0".into(),
        });
    }
    Ok(())
}

/// log(1 - x) = -sum_{n>=1} x^n / n. Coefficients grow like |1/n|_p <= n,
/// which is controlled of order exactly 1 (no smaller beta admits a uniform
/// M), so filtered evaluation is unavailable for this function.
pub fn log1m(arc: &CircleArc) -> Result<SeriesFunction> {
    require_unit_arc_at_zero(arc, "log1m")?;
    let ctx = arc.context();
    Ok(SeriesFunction::from_fn(
        PadicNumber::zero(ctx),
        move |n| {
            if n == 0 {
                PadicNumber::zero(ctx)
            } else {
                PadicNumber::from_rational(ctx, &Rat::new(BigInt::from(-1), BigInt::from(n)))
            }
        },
        false,
    )
    .with_certificate(Certificate {
        log_m: 0.5,
        beta: 1.0,
        n0: 1,
    }))
}

/// Logarithmic derivative of the Artin-Hasse exponential:
/// sum_{t>=0} x^(p^t - 1). Unit coefficients on a very sparse support.
pub fn artin_hasse_log_deriv(arc: &CircleArc) -> Result<SeriesFunction> {
    require_unit_arc_at_zero(arc, "artin_hasse_loderiv")?;
    let ctx = arc.context();
    let p = ctx.p();
    let next = move |n: u64| -> Option<u64> {
        let mut q: u64 = 1; // p^0
        loop {
            if q - 1 >= n {
                return Some(q - 1);
            }
            q = q.checked_mul(p)?;
        }
    };
    Ok(SeriesFunction::from_fn(
        PadicNumber::zero(ctx),
        move |n| {
            if is_p_power(n + 1, p) {
                PadicNumber::one(ctx)
            } else {
                PadicNumber::zero(ctx)
            }
        },
        false,
    )
    .with_certificate(Certificate::bounded(0.5))
    .with_support(Support::Sparse(std::sync::Arc::new(next))))
}

fn is_p_power(mut n: u64, p: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// (1 + x)^t for t in Z_p (given as a p-integral rational): coefficients are
/// the p-adic binomials C(t, n), all of norm <= 1.
pub fn binomial_power(arc: &CircleArc, t: &Rat) -> Result<SeriesFunction> {
    require_unit_arc_at_zero(arc, "binom_t")?;
    let ctx = arc.context();
    if rat_valuation(ctx.p(), t).map(|v| v < 0).unwrap_or(false) {
        return Err(Error::BadBuiltinParams(format!(
            "binom_t needs t in Z_p, got {}",
            t
        )));
    }
    let t = t.clone();
    Ok(SeriesFunction::from_fn(
        PadicNumber::zero(ctx),
        move |n| {
            // C(t, n) = t (t-1) ... (t-n+1) / n!, exactly in Q
            let mut num = Rat::from_integer(BigInt::one());
            let mut den = Rat::from_integer(BigInt::one());
            for i in 0..n {
                num *= &t - rat_i(i as i64);
                den *= rat_i(i as i64 + 1);
            }
            PadicNumber::from_rational(ctx, &(num / den))
        },
        true,
    )
    .with_certificate(Certificate::bounded(0.5)))
}

/// x^(j-3) psi'(1/x) where psi is the derivative of the p-adic log gamma
/// function: the coefficient of x^n is the Bernoulli number B_(n-j+2)
/// (convention t e^t/(e^t - 1), so B_1 = +1/2). Von Staudt-Clausen bounds
/// every coefficient by p.
pub fn bernoulli_psi(arc: &CircleArc, j: u32) -> Result<SeriesFunction> {
    require_unit_arc_at_zero(arc, "bernoulli_psi")?;
    if j < 2 {
        return Err(Error::BadBuiltinParams(format!(
            "bernoulli_psi needs j >= 2, got {}",
            j
        )));
    }
    let ctx = arc.context();
    let cache = bernoulli_cache();
    Ok(SeriesFunction::from_fn(
        PadicNumber::zero(ctx),
        move |n| {
            if n + 2 < j as u64 {
                return PadicNumber::zero(ctx);
            }
            let idx = (n + 2 - j as u64) as usize;
            let b = cache
                .get(idx)
                .unwrap_or_else(|_| panic!("Bernoulli index {} beyond cache bound {}", idx, cache.bound()));
            PadicNumber::from_rational(ctx, b)
        },
        false,
    )
    .with_certificate(Certificate {
        log_m: 1.5,
        beta: 0.0,
        n0: 0,
    }))
}

/// A sparse gap series: unit coefficients exactly at the exponents
/// p^phi(t) - 1 for the given schedule, zero elsewhere. Integrable along
/// its own schedule, divergent along phi(k) = k when the gaps outpace it.
pub fn gap_series(arc: &CircleArc, phi: PathSequence) -> Result<SeriesFunction> {
    require_unit_arc_at_zero(arc, "gap_series")?;
    let ctx = arc.context();
    let p = ctx.p();
    let indices = move || -> Vec<u64> {
        let mut out = Vec::new();
        let mut k = phi.first_k();
        while let Some(e) = phi.at(k) {
            match checked_p_pow(p, e) {
                Some(q) => out.push(q - 1),
                None => break,
            }
            k += 1;
            if k > 64 {
                break;
            }
        }
        out
    };
    let support_list = indices();
    let support = support_list.clone();
    let next = move |n: u64| support.iter().copied().find(|&i| i >= n);
    Ok(SeriesFunction::from_fn(
        PadicNumber::zero(ctx),
        move |n| {
            if support_list.binary_search(&n).is_ok() {
                PadicNumber::one(ctx)
            } else {
                PadicNumber::zero(ctx)
            }
        },
        false,
    )
    .with_certificate(Certificate::bounded(0.5))
    .with_support(Support::Sparse(std::sync::Arc::new(next))))
}

fn checked_p_pow(p: u64, e: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

/// Parse rationals of the form `n` or `n/d`.
pub(crate) fn parse_rat(s: &str) -> Result<Rat> {
    let parse_int = |t: &str, pos: usize| -> Result<BigInt> {
        t.parse::<BigInt>().map_err(|_| Error::Parse {
            position: pos,
            message: format!("expected an integer, got `{}`", t),
        })
    };
    match s.find('/') {
        None => Ok(Rat::from_integer(parse_int(s, 0)?)),
        Some(i) => {
            let num = parse_int(&s[..i], 0)?;
            let den = parse_int(&s[i + 1..], i + 1)?;
            if den == BigInt::from(0) {
                return Err(Error::Parse {
                    position: i + 1,
                    message: "zero denominator".into(),
                });
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// Dispatch by name: `log1m`, `artin_hasse_loderiv`, `binom_t` (rational
/// parameter), `bernoulli_psi` (integer j >= 2), `gap_series` (exponent mu,
/// schedule phi(k) = k^mu).
pub fn builtin(name: &str, params: Option<&str>, arc: &CircleArc) -> Result<SeriesFunction> {
    match name {
        "log1m" => log1m(arc),
        "artin_hasse_loderiv" => artin_hasse_log_deriv(arc),
        "binom_t" => {
            let t = parse_rat(params.ok_or_else(|| {
                Error::BadBuiltinParams("binom_t needs a rational parameter".into())
            })?)?;
            binomial_power(arc, &t)
        }
        "bernoulli_psi" => {
            let j: u32 = params
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::BadBuiltinParams("bernoulli_psi needs an integer j".into()))?;
            bernoulli_psi(arc, j)
        }
        "gap_series" => {
            let mu: u32 = params
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::BadBuiltinParams("gap_series needs an exponent mu".into()))?;
            gap_series(
                arc,
                PathSequence::Power {
                    offset: 0,
                    exponent: mu,
                },
            )
        }
        other => Err(Error::UnknownBuiltin(other.into())),
    }
}

/// Context needed by tests and the CLI to build a standard unit arc at 0.
pub fn unit_arc_at_zero(ctx: PadicContext, center_residue: i64) -> Result<CircleArc> {
    CircleArc::new(
        PadicNumber::from_integer(ctx, center_residue),
        PadicNumber::zero(ctx),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat;

    fn arc(p: u64) -> CircleArc {
        let ctx = PadicContext::new(p, 16).unwrap();
        unit_arc_at_zero(ctx, 1).unwrap()
    }

    #[test]
    fn artin_hasse_coefficients() {
        let a = arc(3);
        let f = artin_hasse_log_deriv(&a).unwrap();
        let one = PadicNumber::one(a.context());
        assert_eq!(f.coeff(0), one);
        assert_eq!(f.coeff(2), one);
        assert_eq!(f.coeff(8), one);
        assert!(f.coeff(5).is_zero());
        assert_eq!(f.next_support(3), Some(8));
    }

    #[test]
    fn log1m_coefficients() {
        let a = arc(5);
        let ctx = a.context();
        let f = log1m(&a).unwrap();
        assert_eq!(f.coeff(1), PadicNumber::from_integer(ctx, -1));
        assert_eq!(
            f.coeff(5),
            PadicNumber::from_rational(ctx, &rat(-1, 5))
        );
        assert_eq!(f.coeff(5).valuation(), crate::padic::Valuation::Finite(-1));
        // certificate spot-checks on the unit arc
        assert!(f.certificate_spot_check(0, 1, 200));
    }

    #[test]
    fn bernoulli_psi_coefficients() {
        let a = arc(5);
        let ctx = a.context();
        let f = bernoulli_psi(&a, 2).unwrap();
        // c_1 = B_1 = +1/2 under this convention
        assert_eq!(f.coeff(1), PadicNumber::from_rational(ctx, &rat(1, 2)));
        assert_eq!(f.coeff(0), PadicNumber::one(ctx));
        assert!(f.coeff(3).is_zero());
        assert!(f.certificate_spot_check(0, 1, 200));
    }

    #[test]
    fn binom_t_integrality() {
        let a = arc(5);
        let f = binomial_power(&a, &rat(1, 3)).unwrap();
        for n in 0..40 {
            let c = f.coeff(n);
            assert!(c.valuation_floor() >= 0, "C(1/3, {}) not integral", n);
        }
        assert!(f.certificate_spot_check(0, 1, 60));
        // t with negative valuation is rejected
        assert!(binomial_power(&a, &rat(1, 5)).is_err());
    }

    #[test]
    fn gap_series_support() {
        let a = arc(5);
        let f = gap_series(
            &a,
            PathSequence::Power {
                offset: 0,
                exponent: 2,
            },
        )
        .unwrap();
        // support at 5^1 - 1, 5^4 - 1, 5^9 - 1, ...
        assert!(f.coeff(4).is_one());
        assert!(f.coeff(624).is_one());
        assert!(f.coeff(24).is_zero());
        assert_eq!(f.next_support(5), Some(624));
    }

    #[test]
    fn dispatcher_and_errors() {
        let a = arc(5);
        assert!(builtin("log1m", None, &a).is_ok());
        assert!(matches!(
            builtin("nope", None, &a),
            Err(Error::UnknownBuiltin(_))
        ));
        assert!(matches!(
            builtin("bernoulli_psi", Some("1"), &a),
            Err(Error::BadBuiltinParams(_))
        ));
        // incompatible arc: basepoint not 0
        let ctx = a.context();
        let bad = CircleArc::new(
            PadicNumber::from_integer(ctx, 0),
            PadicNumber::from_integer(ctx, 1),
        )
        .unwrap();
        assert!(matches!(
            builtin("log1m", None, &bad),
            Err(Error::IncompatibleArc { .. })
        ));
    }
}

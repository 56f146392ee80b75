//! Moving the expansion basepoint inside the arc.
//!
//! With delta = b' - b, the new coefficients are
//!
//! ```text
//!   c'_n = sum_{m >= 0} c_(n+m) C(n+m, n) delta^m,
//! ```
//!
//! truncated at `window` terms. The omitted tail is bounded through the
//! growth certificate, and each reported coefficient's precision is cut to
//! what that bound supports. Polynomial sources re-expand exactly instead.

use num_bigint::BigInt;

use super::arc::CircleArc;
use super::function::{Certificate, SeriesFunction, Support};
use super::ppoly::PPoly;
use crate::error::{Error, Result};
use crate::numtheory::binomial_exact;
use crate::padic::{PadicNumber, Valuation};

impl SeriesFunction {
    pub fn recenter(
        &self,
        arc: &CircleArc,
        new_basepoint: &PadicNumber,
        window: u32,
    ) -> Result<SeriesFunction> {
        if !arc.contains(new_basepoint)? {
            return Err(Error::BasepointOutsideArc);
        }
        let ctx = self.context();
        let delta = new_basepoint.try_sub(self.center())?;
        if delta.is_zero() {
            let mut out = self.clone();
            out.set_center(new_basepoint.clone());
            return Ok(out);
        }

        // exact re-expansion for polynomial sources
        if let Support::Polynomial(deg) = self.support() {
            let coeffs: Vec<PadicNumber> = (0..=*deg).map(|n| self.coeff(n)).collect();
            let shifted = PPoly::new(ctx, coeffs).recenter(&delta)?;
            return Ok(SeriesFunction::from_poly_coeffs(
                new_basepoint.clone(),
                shifted.coeffs().to_vec(),
            ));
        }

        let cert = *self.certificate().ok_or(Error::NoCertificate)?;
        let s_r = arc.radius_valuation();
        let s_delta = match delta.valuation() {
            Valuation::Finite(v) => v,
            Valuation::Infinite => unreachable!("delta checked nonzero"),
        };
        let gap = s_delta - s_r; // >= 1 since the new basepoint is in the arc
        debug_assert!(gap >= 1);

        let src = self.clone();
        let p = ctx.p();
        let w = window as u64;
        let oracle = move |n: u64| -> PadicNumber {
            let mut acc = PadicNumber::zero(ctx);
            let mut dpow = PadicNumber::one(ctx);
            for m in 0..=w {
                let c = src.coeff(n + m);
                if !c.is_zero() {
                    let binom = binomial_exact(n + m, n);
                    let binom = PadicNumber::from_bigint(ctx, &BigInt::from(binom));
                    let term = c
                        .try_mul(&binom)
                        .and_then(|t| t.try_mul(&dpow))
                        .expect("recenter term");
                    acc = acc.try_add(&term).expect("recenter sum");
                }
                if m < w {
                    dpow = dpow.try_mul(&delta).expect("delta power");
                }
            }
            // cut precision to the certified tail bound:
            // val(tail) >= -n s_R - log M - beta log(n + w + 1) + (w+1) gap
            let tail_floor = -(n as i64 * s_r) as f64 - cert.log_m
                - cert.beta * ((n + w + 1).max(2) as f64).log(p as f64)
                + ((w + 1) as i64 * gap) as f64;
            acc.truncate_to(tail_floor.ceil() as i64)
        };

        // the same (M, beta) certify the new expansion from some larger n0
        let n0_shift = (cert.beta / (gap as f64 * (p as f64).ln())).ceil() as u64 + 1;
        Ok(
            SeriesFunction::from_fn(new_basepoint.clone(), oracle, true).with_certificate(
                Certificate {
                    log_m: cert.log_m,
                    beta: cert.beta,
                    n0: cert.n0 + n0_shift + w,
                },
            ),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::qpoly::{QPoly, RationalFunction};
    use crate::padic::PadicContext;
    use crate::ratio::rat_i;

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

    #[test]
    fn zero_shift_is_identity() {
        let c = ctx();
        let arc = unit_arc(c);
        let f =
            SeriesFunction::from_rational(&RationalFunction::from_poly(QPoly::from_ints(&[1, 2, 1])), &arc)
                .unwrap();
        let g = f
            .recenter(&arc, &PadicNumber::from_integer(c, 1), 10)
            .unwrap();
        for n in 0..5 {
            assert_eq!(f.coeff(n), g.coeff(n));
        }
    }

    #[test]
    fn polynomial_recenter_matches_substitution() {
        let c = ctx();
        let arc = unit_arc(c);
        // f = x^3 - 2x about b = 1, recentered to b' = 6
        let f = SeriesFunction::from_rational(
            &RationalFunction::from_poly(QPoly::from_ints(&[0, -2, 0, 1])),
            &arc,
        )
        .unwrap();
        let g = f
            .recenter(&arc, &PadicNumber::from_integer(c, 6), 8)
            .unwrap();
        // compare against direct expansion about 6
        let direct = QPoly::from_ints(&[0, -2, 0, 1]).compose(&QPoly::new(vec![rat_i(6), rat_i(1)]));
        for n in 0..4u64 {
            assert_eq!(
                g.coeff(n),
                PadicNumber::from_rational(c, &direct.coeff(n as usize)),
                "c'_{}",
                n
            );
        }
    }

    #[test]
    fn rational_recenter_converges_to_point_value() {
        let c = ctx();
        let arc = unit_arc(c);
        // f = 1/(x - 3); c'_0 should approach f(b') = 1/(6 - 3) = 1/3
        let f = SeriesFunction::from_rational(
            &RationalFunction::new(QPoly::one(), QPoly::from_ints(&[-3, 1])),
            &arc,
        )
        .unwrap();
        let bp = PadicNumber::from_integer(c, 6);
        let expected = PadicNumber::from_rational(c, &crate::ratio::rat(1, 3));
        let mut prev_gap = i64::MIN;
        for window in [2u32, 6, 12] {
            let g = f.recenter(&arc, &bp, window).unwrap();
            let got = g.coeff(0);
            let gap = got.residual_valuation(&expected);
            assert!(gap >= prev_gap, "window {} made things worse", window);
            prev_gap = gap;
            // reported precision honors the tail bound
            assert!(gap >= got.precision().min(expected.precision()) - 1);
        }
        assert!(prev_gap >= 12, "window 12 should give 12+ digits, got {}", prev_gap);
    }

    #[test]
    fn certificate_survives_recentering() {
        let c = ctx();
        let arc = unit_arc(c);
        let f = SeriesFunction::from_rational(
            &RationalFunction::new(QPoly::one(), QPoly::from_ints(&[-3, 1])),
            &arc,
        )
        .unwrap();
        let g = f
            .recenter(&arc, &PadicNumber::from_integer(c, 6), 10)
            .unwrap();
        assert!(g.certificate().is_some());
        assert!(g.certificate_spot_check(arc.radius_valuation(), 1, 60));
    }

    #[test]
    fn missing_certificate_is_an_error() {
        let c = ctx();
        let arc = unit_arc(c);
        let f = SeriesFunction::from_fn(
            PadicNumber::from_integer(c, 1),
            move |_| PadicNumber::one(c),
            false,
        );
        assert!(matches!(
            f.recenter(&arc, &PadicNumber::from_integer(c, 6), 4),
            Err(Error::NoCertificate)
        ));
    }

    #[test]
    fn outside_basepoint_rejected() {
        let c = ctx();
        let arc = unit_arc(c);
        let f = SeriesFunction::from_fn(
            PadicNumber::from_integer(c, 1),
            move |_| PadicNumber::one(c),
            false,
        );
        assert!(matches!(
            f.recenter(&arc, &PadicNumber::from_integer(c, 3), 4),
            Err(Error::BasepointOutsideArc)
        ));
    }
}

//! Coefficient oracles with growth certificates.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::arc::CircleArc;
use super::rational::RationalExpansion;
use crate::padic::{PadicContext, PadicNumber, Valuation};

/// Asserts |c_n|_p R^n < M n^beta for n > n0, carried in log_p units:
/// `log_m` = log_p M. A beta of zero certifies boundedness by M.
#[derive(Clone, Copy, Debug)]
pub struct Certificate {
    pub log_m: f64,
    pub beta: f64,
    pub n0: u64,
}

impl Certificate {
    pub fn bounded(log_m: f64) -> Self {
        Certificate {
            log_m,
            beta: 0.0,
            n0: 0,
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.beta == 0.0
    }

    /// Does a concrete coefficient satisfy the certified bound?
    /// The bound in valuations: val(c_n) + n * s_R > -(log_m + beta log_p n).
    pub fn admits(&self, p: u64, radius_val: i64, n: u64, coeff: &PadicNumber) -> bool {
        if n <= self.n0 {
            return true;
        }
        let lhs = match coeff.valuation() {
            Valuation::Infinite => return true,
            Valuation::Finite(v) => v as f64 + n as f64 * radius_val as f64,
        };
        lhs > -(self.log_m + self.beta * (n as f64).log(p as f64))
    }

    /// Valuation lower bound for c_n (a-b)^(n+1):
    /// val >= (n+1) s_R - n s_R - log stuff = s_R - log_m - beta log_p n.
    pub fn term_valuation_floor(&self, p: u64, radius_val: i64, n: u64) -> f64 {
        radius_val as f64 - self.log_m - self.beta * (n.max(2) as f64).log(p as f64)
    }
}

/// Where coefficients come from.
#[derive(Clone)]
pub(crate) enum CoeffSource {
    /// finitely many explicit coefficients about the center
    Poly(Vec<PadicNumber>),
    /// partial-fraction expansion of a rational function
    Rational(RationalExpansion),
    /// arbitrary oracle, optionally memoized (clones share the cache)
    Func {
        f: Arc<dyn Fn(u64) -> PadicNumber + Send + Sync>,
        memo: Option<Arc<Mutex<HashMap<u64, PadicNumber>>>>,
    },
}

/// Support hints let the evaluator skip provably-zero coefficients.
#[derive(Clone)]
pub enum Support {
    Dense,
    /// zero beyond this degree
    Polynomial(u64),
    /// next nonzero index >= n, None when none remains in range
    Sparse(Arc<dyn Fn(u64) -> Option<u64> + Send + Sync>),
}

impl std::fmt::Debug for Support {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Support::Dense => write!(f, "Dense"),
            Support::Polynomial(d) => write!(f, "Polynomial({})", d),
            Support::Sparse(_) => write!(f, "Sparse"),
        }
    }
}

/// A function on an arc, given by the coefficients of its power series about
/// the arc's basepoint. Concurrent coefficient queries are safe and return
/// identical values.
#[derive(Clone)]
pub struct SeriesFunction {
    ctx: PadicContext,
    center: PadicNumber,
    pub(crate) source: CoeffSource,
    certificate: Option<Certificate>,
    support: Support,
}

impl SeriesFunction {
    pub fn from_poly_coeffs(center: PadicNumber, coeffs: Vec<PadicNumber>) -> Self {
        let ctx = center.context();
        let deg = coeffs.len().saturating_sub(1) as u64;
        SeriesFunction {
            ctx,
            center,
            source: CoeffSource::Poly(coeffs),
            certificate: None,
            support: Support::Polynomial(deg),
        }
    }

    pub fn from_fn(
        center: PadicNumber,
        f: impl Fn(u64) -> PadicNumber + Send + Sync + 'static,
        memoize: bool,
    ) -> Self {
        let ctx = center.context();
        SeriesFunction {
            ctx,
            center,
            source: CoeffSource::Func {
                f: Arc::new(f),
                memo: if memoize {
                    Some(Arc::new(Mutex::new(HashMap::new())))
                } else {
                    None
                },
            },
            certificate: None,
            support: Support::Dense,
        }
    }

    pub(crate) fn from_rational_expansion(exp: RationalExpansion) -> Self {
        let ctx = exp.center.context();
        let center = exp.center.clone();
        SeriesFunction {
            ctx,
            center,
            source: CoeffSource::Rational(exp),
            certificate: None,
            support: Support::Dense,
        }
    }

    pub fn with_certificate(mut self, cert: Certificate) -> Self {
        self.certificate = Some(cert);
        self
    }

    pub fn with_support(mut self, support: Support) -> Self {
        self.support = support;
        self
    }

    pub fn context(&self) -> PadicContext {
        self.ctx
    }

    pub fn center(&self) -> &PadicNumber {
        &self.center
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        self.certificate.as_ref()
    }

    pub fn support(&self) -> &Support {
        &self.support
    }

    /// The underlying partial-fraction data, when this series came from a
    /// rational function. Exact closed-form level sums are available then.
    pub fn rational_parts(&self) -> Option<&RationalExpansion> {
        match &self.source {
            CoeffSource::Rational(exp) => Some(exp),
            _ => None,
        }
    }

    /// c_n.
    pub fn coeff(&self, n: u64) -> PadicNumber {
        match &self.source {
            CoeffSource::Poly(coeffs) => coeffs
                .get(n as usize)
                .cloned()
                .unwrap_or_else(|| PadicNumber::zero(self.ctx)),
            CoeffSource::Rational(exp) => exp.coeff(n),
            CoeffSource::Func { f, memo } => match memo {
                None => f(n),
                Some(m) => {
                    if let Some(v) = m.lock().unwrap().get(&n) {
                        return v.clone();
                    }
                    let v = f(n);
                    m.lock().unwrap().insert(n, v.clone());
                    v
                }
            },
        }
    }

    /// First index >= n that may carry a nonzero coefficient, per the
    /// support hint. None means provably zero from n on.
    pub fn next_support(&self, n: u64) -> Option<u64> {
        match &self.support {
            Support::Dense => Some(n),
            Support::Polynomial(deg) => {
                if n <= *deg {
                    Some(n)
                } else {
                    None
                }
            }
            Support::Sparse(next) => next(n),
        }
    }

    /// Spot-check the certificate on a sample window of coefficients.
    pub fn certificate_spot_check(&self, radius_val: i64, from: u64, count: u64) -> bool {
        let cert = match self.certificate {
            None => return false,
            Some(c) => c,
        };
        let p = self.ctx.p();
        let mut n = from.max(cert.n0 + 1);
        let mut seen = 0;
        while seen < count {
            match self.next_support(n) {
                None => return true, // all further coefficients vanish
                Some(m) => {
                    if !cert.admits(p, radius_val, m, &self.coeff(m)) {
                        return false;
                    }
                    n = m + 1;
                    seen += 1;
                }
            }
        }
        true
    }

    /// Largest |c_n|_p R^n over the polynomial range, for explicit sources.
    pub fn sup_norm_valuation(&self, arc: &CircleArc) -> Option<i64> {
        if let CoeffSource::Poly(coeffs) = &self.source {
            let s = arc.radius_valuation();
            let mut best: Option<i64> = None;
            for (n, c) in coeffs.iter().enumerate() {
                if let Valuation::Finite(v) = c.valuation() {
                    let t = v + n as i64 * s;
                    best = Some(best.map(|b: i64| b.min(t)).unwrap_or(t));
                }
            }
            best
        } else {
            None
        }
    }
}

impl std::fmt::Debug for SeriesFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SeriesFunction")
            .field("center", &self.center)
            .field("certificate", &self.certificate)
            .field("support", &self.support)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PadicContext {
        PadicContext::new(5, 12).unwrap()
    }

    #[test]
    fn polynomial_source_truncates() {
        let c = ctx();
        let f = SeriesFunction::from_poly_coeffs(
            PadicNumber::from_integer(c, 1),
            vec![
                PadicNumber::from_integer(c, 1),
                PadicNumber::from_integer(c, 2),
                PadicNumber::from_integer(c, 1),
            ],
        );
        assert_eq!(f.coeff(1), PadicNumber::from_integer(c, 2));
        assert!(f.coeff(3).is_zero());
        assert_eq!(f.next_support(3), None);
    }

    #[test]
    fn memoized_oracle_returns_identical_values() {
        let c = ctx();
        let f = SeriesFunction::from_fn(
            PadicNumber::zero(c),
            move |n| PadicNumber::from_integer(c, n as i64),
            true,
        );
        let a = f.coeff(7);
        let b = f.coeff(7);
        assert_eq!(a, b);
    }

    #[test]
    fn certificate_spot_check_flags_violations() {
        let c = ctx();
        // c_n = p^-n: |c_n| R^n = p^n on the unit arc, certified bounded: false
        let f = SeriesFunction::from_fn(
            PadicNumber::zero(c),
            move |n| {
                PadicNumber::p_power(c, -(n as i64).min(10))
            },
            false,
        )
        .with_certificate(Certificate::bounded(0.5));
        assert!(!f.certificate_spot_check(0, 1, 5));
        // constant coefficients are bounded
        let g = SeriesFunction::from_fn(PadicNumber::zero(c), move |_| PadicNumber::one(c), false)
            .with_certificate(Certificate::bounded(0.5));
        assert!(g.certificate_spot_check(0, 1, 50));
    }
}

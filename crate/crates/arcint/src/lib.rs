//! Exact line integrals on arcs of circles in Q_p.
//!
//! A circle of radius R in Q_p is mostly *boundary*: it splits into open
//! discs of radius R, and one such disc attached to a basepoint b is an
//! *arc*. This crate computes the line integral of a function on an arc as
//! the limit of root-of-unity level sums
//!
//! ```text
//!   S(k) = p^(-phi(k)) * sum_zeta (x - a) f(x),   x = a + (b - a) zeta,
//! ```
//!
//! where zeta runs over the p^phi(k)-th roots of unity and phi is a path
//! sequence. Everything is exact modulo p^N: values carry their valuation
//! and known precision, rational inputs embed exactly, and an independent
//! cyclotomic oracle over Q re-evaluates the defining sums from scratch.
//!
//! The main pieces:
//!
//! - [`padic`]: truncated Q_p arithmetic, Teichmüller character, linear
//!   solves with valuation pivoting.
//! - [`oracle`]: exact arithmetic in Q(zeta_{p^k}) and the brute-force level
//!   sums used to cross-check everything else.
//! - [`numtheory`]: Bernoulli numbers (convention t e^t/(e^t - 1), so
//!   B_1 = +1/2), binomial valuations, Kazandzidis-type congruences.
//! - [`series`]: functions on arcs as coefficient oracles, with growth
//!   certificates, rational expansions, and the builtin library.
//! - [`integrate`]: level-sum evaluation (full, truncated, filtered),
//!   limit detection, closed forms for rational integrands, ray limits and
//!   the delta-weighted reconstruction that reaches Kubota-Leopoldt values.
//! - [`cauchy`]: residue theorem for Krasner functions, Cauchy-Goursat on
//!   discs with small and full-radius holes, Cauchy integral formulas, and
//!   the unit-determinant weight matrices behind them.
//! - [`suites`]: named end-to-end verification suites driven by the CLI and
//!   the acceptance tests.

pub mod cauchy;
pub mod error;
pub mod integrate;
pub mod numtheory;
pub mod oracle;
pub mod padic;
pub mod ratio;
pub mod series;
pub mod suites;

pub use error::{Error, Result};
pub use padic::{PadicContext, PadicMatrix, PadicNumber, Valuation};

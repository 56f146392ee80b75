//! Truncated arithmetic in Q_p with explicit precision tracking.
//!
//! Every value is stored as `p^v * u` with `u` a unit known modulo
//! `p^(A - v)`, where `A` is the *absolute* precision: the value is known
//! modulo `p^A`. All absolute precisions are capped by the context's working
//! precision `N`, and arithmetic never invents digits: precision only
//! shrinks. A value whose digits all vanish at its known precision is "zero
//! to precision" and compares equal to exact zero.

mod context;
mod matrix;
mod number;
mod teichmuller;

pub use context::PadicContext;
pub use matrix::PadicMatrix;
pub use number::{PadicNumber, Valuation};
pub use teichmuller::teichmuller_lift;

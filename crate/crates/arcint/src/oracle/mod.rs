//! The independent brute-force oracle.
//!
//! Level sums are re-evaluated from their definition, in exact arithmetic
//! over Q(zeta_{p^m}): sample the integrand at all p^m-th roots of unity,
//! sum in the cyclotomic field, and observe that Galois stability forces a
//! rational answer. Nothing here touches truncated p-adic arithmetic, so
//! the oracle cannot share bugs with the main evaluation path.

mod cyclotomic;
pub mod qpoly;
mod sums;

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicElement};
pub use qpoly::{QPoly, RationalFunction};
pub use sums::{exact_level_sum, exact_level_sum_with_root, DEFAULT_ENUMERATION_CAP};

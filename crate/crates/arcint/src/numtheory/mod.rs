//! Exact integer support: Bernoulli numbers, binomial coefficients with
//! their p-adic valuations, and the congruence checks the integrator leans
//! on.

mod bernoulli;
mod binom;
mod kazandzidis;

pub use bernoulli::{
    bernoulli_cache, naive_bernoulli, von_staudt_clausen_denominator, BernoulliCache,
    DEFAULT_BERNOULLI_BOUND,
};
pub use binom::{binomial_exact, binomial_valuation, BinomTable, EXACT_BINOMIAL_LIMIT};
pub use kazandzidis::kazandzidis_holds;

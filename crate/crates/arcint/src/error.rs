//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Variants carry enough context to diagnose the failing input; arithmetic
/// errors report the precision at which the failure became visible.
#[derive(Debug, Error)]
pub enum Error {
    #[error("p = {p} is not an odd prime")]
    InvalidPrime { p: u64 },
    #[error("working precision must be at least 1")]
    InvalidPrecision,
    #[error("operands belong to different p-adic contexts")]
    ContextMismatch,
    #[error("division by a value indistinguishable from zero (known mod p^{precision})")]
    DivisionByZero { precision: i64 },
    #[error("result has no significant digits at working precision (absolute precision {precision})")]
    PrecisionExhausted { precision: i64 },
    #[error("Teichmüller character needs |x|_p <= 1, got valuation {valuation}")]
    NormTooLarge { valuation: i64 },
    #[error("matrix is singular to working precision (no pivot in column {column})")]
    SingularToPrecision { column: usize },
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),

    // exact cyclotomic oracle
    #[error("cyclotomic elements have different levels ({0} vs {1})")]
    LevelMismatch(u32, u32),
    #[error("element is not invertible in the cyclotomic ring")]
    NotInvertible,
    #[error("denominator vanishes at a sample point (root of unity of level <= {level})")]
    PoleOnSampleSet { level: u32 },
    #[error("p^m = {pm} exceeds the enumeration cap {cap}")]
    LevelTooLarge { pm: u64, cap: u64 },

    // series construction
    #[error("pole at {0} lies inside the arc")]
    PoleInArc(String),
    #[error("denominator root not in Q_p (or not separable enough to certify): {0}")]
    IrrationalPole(String),
    #[error("new basepoint lies outside the arc")]
    BasepointOutsideArc,
    #[error("operation needs a coefficient growth certificate and none is attached")]
    NoCertificate,
    #[error("map does not send the given center to the required center")]
    CenterMismatch,
    #[error("unknown builtin function `{0}`")]
    UnknownBuiltin(String),
    #[error("builtin `{name}` is not defined on this arc: {why}")]
    IncompatibleArc { name: String, why: String },
    #[error("bad builtin parameter: {0}")]
    BadBuiltinParams(String),

    // integration
    #[error("evaluation strategy needs a certificate for this function")]
    CertificateRequired,
    #[error("filtered evaluation needs controlled coefficients of order beta < 1 (have beta = {beta})")]
    BetaTooLarge { beta: f64 },
    #[error("no convergence at target precision {target} within k_max = {k_max}")]
    NoConvergence {
        target: i64,
        k_max: u32,
        /// valuation of |A(k+1) - A(k)| per step, `None` for an exact-zero step
        trace: Vec<(u32, Option<i64>)>,
    },
    #[error("schedule not supported: {0}")]
    ScheduleUnsupported(String),
    #[error("cannot classify point against the circle at available precision")]
    UnresolvedClassification,
    #[error("series evaluation would exceed the term budget ({0} terms); raise the budget or use a coarser target")]
    TermBudgetExceeded(u64),

    // ray limits
    #[error("ray limits are not constant on residue classes mod {n}: d = {d1} vs d = {d2}")]
    ClassInconsistency { n: u64, d1: u64, d2: u64 },
    #[error("order {n} does not divide p - 1 = {pm1}")]
    UnsupportedOrder { n: u64, pm1: u64 },
    #[error("path sequence violates the growth condition needed here")]
    GrowthConditionViolated,

    // Cauchy machinery
    #[error("domain geometry violated: {0}")]
    GeometryViolation(String),
    #[error("domain has a hole of full radius where none is allowed")]
    LargeHolePresent,
    #[error("weight matrix determinant is not a unit (valuation {valuation}); this should not happen")]
    UnitDeterminantViolated { valuation: i64 },
    #[error("evaluation point lies on the data arc")]
    ZOnArc,
    #[error("function is not holomorphic on the closed disc (coefficients do not decay)")]
    NotClosedDiscHolomorphic,
    #[error("evaluation point is outside the region this formula reaches")]
    ZOutsideDStar,
    #[error("2x2 weight determinant vanishes for this choice of auxiliary center")]
    DeterminantZero,
    #[error("basepoint lies inside a removed disc")]
    BasepointInHole,

    // numtheory
    #[error("Bernoulli index {n} exceeds the cache bound {nmax}")]
    IndexTooLarge { n: usize, nmax: usize },

    // cli / suites
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

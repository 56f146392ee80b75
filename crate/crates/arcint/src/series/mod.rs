//! Functions on arcs, represented as power-series coefficient oracles.
//!
//! An arc is an open disc of radius R sitting on the circle |x - a|_p = R,
//! attached to a basepoint b. A function on the arc is a coefficient oracle
//! n -> c_n for the expansion about b, optionally carrying a growth
//! certificate |c_n|_p R^n < M n^beta that the evaluation theorems need.
//! All radii in this crate are powers of p and are stored as valuations.

mod arc;
mod automorphism;
mod builtins;
mod function;
mod krasner;
mod path;
mod ppoly;
mod rational;
mod recenter;

pub use arc::{CircleArc, PointClass};
pub use automorphism::{disc_automorphism_parts, AutomorphismParts};
pub use builtins::builtin;
pub use function::{Certificate, SeriesFunction, Support};
pub use krasner::{KrasnerFunction, LaurentTail};
pub use path::{PathSequence, Schedule};
pub use ppoly::PPoly;
pub use rational::{PoleTerm, RationalExpansion};

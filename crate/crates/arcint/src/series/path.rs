//! Path sequences and the interlocked families the integrator can search.
//!
//! A path sequence is a strictly increasing positive-integer schedule
//! phi(k) indexing root-of-unity levels p^phi(k). The two searchable
//! families are the affine family { alpha + lambda k : lambda >= 1 } and the
//! power family { alpha + k^mu : mu >= 1 }; both are interlocked (any two
//! members share a common subsequence inside the family).

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub enum PathSequence {
    /// phi(k) = offset + slope * k
    Affine { offset: i64, slope: u64 },
    /// phi(k) = offset + k^exponent
    Power { offset: i64, exponent: u32 },
    /// explicit strictly increasing values, phi(k) = values[k - 1]
    Explicit(Vec<u32>),
}

impl PathSequence {
    pub fn identity() -> Self {
        PathSequence::Affine {
            offset: 0,
            slope: 1,
        }
    }

    /// Smallest k >= 1 with phi(k) >= 1 (and inside the domain).
    pub fn first_k(&self) -> u32 {
        match self {
            PathSequence::Affine { offset, slope } => {
                let mut k = 1u32;
                while (*offset + (*slope as i64) * k as i64) < 1 {
                    k += 1;
                }
                k
            }
            PathSequence::Power { offset, exponent } => {
                let mut k = 1u32;
                while *offset + (k as i64).pow(*exponent) < 1 {
                    k += 1;
                }
                k
            }
            PathSequence::Explicit(_) => 1,
        }
    }

    /// phi(k), when k is in the domain.
    pub fn at(&self, k: u32) -> Option<u32> {
        if k < self.first_k() {
            return None;
        }
        match self {
            PathSequence::Affine { offset, slope } => {
                u32::try_from(*offset + (*slope as i64) * k as i64).ok()
            }
            PathSequence::Power { offset, exponent } => {
                u32::try_from(*offset + (k as i64).pow(*exponent)).ok()
            }
            PathSequence::Explicit(values) => values.get(k as usize - 1).copied(),
        }
    }

    /// phi(k+1) - phi(k).
    pub fn step(&self, k: u32) -> Option<u32> {
        Some(self.at(k + 1)? - self.at(k)?)
    }

    pub fn is_strictly_increasing(&self) -> bool {
        match self {
            PathSequence::Explicit(values) => values.windows(2).all(|w| w[0] < w[1]),
            _ => true,
        }
    }
}

/// A schedule for the integrator: one path sequence, or an interlocked
/// family to search.
#[derive(Clone, Debug, Serialize)]
pub enum Schedule {
    Single(PathSequence),
    /// { offset + lambda k : lambda = 1, 2, ... }
    PhiFamily { offset: i64 },
    /// { offset + k^mu : mu = 1, 2, ... }
    PsiFamily { offset: i64 },
}

impl Schedule {
    pub fn identity() -> Self {
        Schedule::Single(PathSequence::identity())
    }

    pub fn describe(&self) -> String {
        match self {
            Schedule::Single(PathSequence::Affine { offset, slope }) => {
                format!("phi(k) = {} + {}k", offset, slope)
            }
            Schedule::Single(PathSequence::Power { offset, exponent }) => {
                format!("phi(k) = {} + k^{}", offset, exponent)
            }
            Schedule::Single(PathSequence::Explicit(v)) => format!("phi = {:?}", v),
            Schedule::PhiFamily { offset } => format!("family {{{} + lambda k}}", offset),
            Schedule::PsiFamily { offset } => format!("family {{{} + k^mu}}", offset),
        }
    }
}

//! The integration domain: an arc of a circle in Q_p.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::padic::{PadicContext, PadicNumber, Valuation};

/// Position of a point relative to the circle |x - a|_p = R.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum PointClass {
    Interior,
    OnCircle,
    Exterior,
}

/// The arc at basepoint b of the circle with center a and radius
/// R = |a - b|_p: the open disc { x : |x - b|_p < R }.
#[derive(Clone, Debug)]
pub struct CircleArc {
    center: PadicNumber,
    basepoint: PadicNumber,
    radius_val: i64, // R = p^(-radius_val)
}

impl CircleArc {
    pub fn new(center: PadicNumber, basepoint: PadicNumber) -> Result<Self> {
        let diff = center.try_sub(&basepoint)?;
        match diff.valuation() {
            Valuation::Finite(v) => Ok(CircleArc {
                center,
                basepoint,
                radius_val: v,
            }),
            Valuation::Infinite => Err(Error::GeometryViolation(
                "arc needs distinct center and basepoint".into(),
            )),
        }
    }

    pub fn context(&self) -> PadicContext {
        self.center.context()
    }

    pub fn center(&self) -> &PadicNumber {
        &self.center
    }

    pub fn basepoint(&self) -> &PadicNumber {
        &self.basepoint
    }

    /// s with R = p^(-s).
    pub fn radius_valuation(&self) -> i64 {
        self.radius_val
    }

    /// a - b; its valuation is the radius valuation.
    pub fn span(&self) -> PadicNumber {
        self.center.try_sub(&self.basepoint).expect("arc span")
    }

    /// Membership in the open disc around the basepoint: |x - b|_p < R.
    pub fn contains(&self, x: &PadicNumber) -> Result<bool> {
        let v = x.try_sub(&self.basepoint)?;
        match v.valuation() {
            Valuation::Finite(w) => Ok(w > self.radius_val),
            Valuation::Infinite => {
                if v.precision() > self.radius_val {
                    Ok(true)
                } else {
                    Err(Error::UnresolvedClassification)
                }
            }
        }
    }

    /// Classify x against the circle |x - a|_p = R by exact valuation
    /// comparison; equality at insufficient precision is an error, never a
    /// guess.
    pub fn classify(&self, x: &PadicNumber) -> Result<PointClass> {
        let v = x.try_sub(&self.center)?;
        match v.valuation() {
            Valuation::Finite(w) if w > self.radius_val => Ok(PointClass::Interior),
            Valuation::Finite(w) if w == self.radius_val => Ok(PointClass::OnCircle),
            Valuation::Finite(_) => Ok(PointClass::Exterior),
            Valuation::Infinite => {
                if v.precision() > self.radius_val {
                    Ok(PointClass::Interior)
                } else {
                    Err(Error::UnresolvedClassification)
                }
            }
        }
    }

    /// (a - x0)/(a - b), the argument fed to the Teichmüller character in
    /// every boundary closed form.
    pub fn omega_argument(&self, x0: &PadicNumber) -> Result<PadicNumber> {
        let num = self.center.try_sub(x0)?;
        num.try_div(&self.span())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::PadicContext;

    fn ctx() -> PadicContext {
        PadicContext::new(5, 20).unwrap()
    }

    fn int(n: i64) -> PadicNumber {
        PadicNumber::from_integer(ctx(), n)
    }

    #[test]
    fn unit_arc_classification() {
        let arc = CircleArc::new(int(0), int(1)).unwrap();
        assert_eq!(arc.radius_valuation(), 0);
        assert_eq!(arc.classify(&int(5)).unwrap(), PointClass::Interior);
        assert_eq!(arc.classify(&int(3)).unwrap(), PointClass::OnCircle);
        let big = PadicNumber::from_rational(ctx(), &crate::ratio::rat(1, 5));
        assert_eq!(arc.classify(&big).unwrap(), PointClass::Exterior);
        // the basepoint is on the circle but inside the arc
        assert!(arc.contains(&int(1)).unwrap());
        assert!(arc.contains(&int(6)).unwrap());
        assert!(!arc.contains(&int(3)).unwrap());
    }

    #[test]
    fn degenerate_arc_rejected() {
        let e = CircleArc::new(int(2), int(2));
        assert!(matches!(e, Err(Error::GeometryViolation(_))));
    }

    #[test]
    fn unresolved_classification_is_an_error() {
        let arc = CircleArc::new(int(0), int(1)).unwrap();
        // a point equal to the center only to low precision
        let fuzzy = PadicNumber::zero_to_precision(ctx(), 0);
        assert!(matches!(
            arc.classify(&fuzzy),
            Err(Error::UnresolvedClassification)
        ));
    }
}

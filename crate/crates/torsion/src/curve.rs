//! Curve and point types: the exact arithmetic foundation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("singular curve: 4*({a})^3 + 27*({b})^2 = 0")]
    SingularCurve { a: BigInt, b: BigInt },
}

/// A short-Weierstrass curve `Y^2 = X^3 + A X + B` with integer coefficients
/// and `4A^3 + 27B^2 != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Curve {
    a: BigInt,
    b: BigInt,
    disc: BigInt,
}

impl Curve {
    /// Validates nonsingularity and stores `4A^3 + 27B^2`.
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self, CurveError> {
        let a = a.into();
        let b = b.into();
        let disc = disc_quantity_of(&a, &b);
        if disc.is_zero() {
            return Err(CurveError::SingularCurve { a, b });
        }
        Ok(Curve { a, b, disc })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// The stored quantity `4A^3 + 27B^2` (nonzero by construction). This is
    /// (up to sign) the discriminant of the cubic and the modulus appearing in
    /// the strong Nagell-Lutz divisibility condition `y^2 | 4A^3 + 27B^2`.
    pub fn disc_quantity(&self) -> &BigInt {
        &self.disc
    }

    /// Exact membership test.
    pub fn contains(&self, p: &Point) -> bool {
        match p {
            Point::Identity => true,
            Point::Affine { x, y } => {
                let a = BigRational::from(self.a.clone());
                let b = BigRational::from(self.b.clone());
                y * y == x * x * x + a * x + b
            }
        }
    }

    pub fn contains_integer(&self, p: &IntegerPoint) -> bool {
        &p.y * &p.y == &p.x * &p.x * &p.x + &self.a * &p.x + &self.b
    }

    /// Evaluates the curve polynomial `x^3 + A x + B` at an integer `x`.
    pub fn rhs_at(&self, x: &BigInt) -> BigInt {
        x * x * x + &self.a * x + &self.b
    }

    /// The twist `(A, B) -> (l^4 A, l^6 B)`; points map by `(x, y) -> (l^2 x, l^3 y)`.
    pub fn twist(&self, lambda: &BigInt) -> Result<Curve, CurveError> {
        let l2 = lambda * lambda;
        let l4 = &l2 * &l2;
        let l6 = &l4 * &l2;
        Curve::new(&self.a * l4, &self.b * l6)
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y^2 = X^3 + ({})X + ({})", self.a, self.b)
    }
}

/// The quantity `4A^3 + 27B^2` for arbitrary integer coefficients.
pub fn disc_quantity_of(a: &BigInt, b: &BigInt) -> BigInt {
    4 * a * a * a + 27 * b * b
}

/// A rational point: the identity or an exact affine pair. Rationals are kept
/// in lowest terms with positive denominator, so structural equality is value
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Point {
    Identity,
    Affine { x: BigRational, y: BigRational },
}

impl Point {
    pub fn affine(x: impl Into<BigRational>, y: impl Into<BigRational>) -> Self {
        Point::Affine { x: x.into(), y: y.into() }
    }

    pub fn from_integers(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Point::Affine {
            x: BigRational::from(x.into()),
            y: BigRational::from(y.into()),
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, Point::Identity)
    }

    pub fn negate(&self) -> Point {
        match self {
            Point::Identity => Point::Identity,
            Point::Affine { x, y } => Point::Affine { x: x.clone(), y: -y.clone() },
        }
    }

    /// Both coordinates integral? Returns the integer point if so.
    pub fn to_integer_point(&self) -> Option<IntegerPoint> {
        match self {
            Point::Identity => None,
            Point::Affine { x, y } => {
                if x.is_integer() && y.is_integer() {
                    Some(IntegerPoint::new(x.to_integer(), y.to_integer()))
                } else {
                    None
                }
            }
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Identity => write!(f, "O"),
            Point::Affine { x, y } => write!(f, "({}, {})", x, y),
        }
    }
}

/// An integer-coordinate affine point; torsion candidates per Nagell-Lutz.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerPoint {
    pub x: BigInt,
    pub y: BigInt,
}

impl IntegerPoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        IntegerPoint { x: x.into(), y: y.into() }
    }

    pub fn to_point(&self) -> Point {
        Point::from_integers(self.x.clone(), self.y.clone())
    }

    pub fn negate(&self) -> IntegerPoint {
        IntegerPoint::new(self.x.clone(), -self.y.clone())
    }

    pub fn is_two_torsion(&self) -> bool {
        self.y.is_zero()
    }

    /// Strong Nagell-Lutz filter: `y = 0` or `y^2 | 4A^3 + 27B^2`.
    pub fn satisfies_nagell_lutz(&self, c: &Curve) -> bool {
        if self.y.is_zero() {
            return true;
        }
        (c.disc_quantity() % (&self.y * &self.y)).is_zero()
    }
}

impl fmt::Display for IntegerPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_curve_validates() {
        let c = Curve::new(-4, 0).unwrap();
        assert_eq!(c.disc_quantity(), &BigInt::from(-256));
        assert!(matches!(Curve::new(0, 0), Err(CurveError::SingularCurve { .. })));
        // 4*(-27) + 27*4 = 0
        assert!(matches!(Curve::new(-3, 2), Err(CurveError::SingularCurve { .. })));
    }

    #[test]
    fn disc_quantity_examples() {
        assert_eq!(disc_quantity_of(&BigInt::from(-92), &BigInt::from(480)), BigInt::from(3106048));
        assert_eq!(disc_quantity_of(&BigInt::from(0), &BigInt::from(1)), BigInt::from(27));
        assert_eq!(disc_quantity_of(&BigInt::from(1), &BigInt::from(0)), BigInt::from(4));
    }

    #[test]
    fn contains_examples() {
        let c = Curve::new(-432, 8208).unwrap();
        assert!(c.contains(&Point::from_integers(-12, 108)));
        let c = Curve::new(-4, 0).unwrap();
        assert!(c.contains(&Point::from_integers(2, 0)));
        assert!(!c.contains(&Point::from_integers(1, 1)));
        assert!(c.contains(&Point::Identity));
    }

    #[test]
    fn contains_respects_y_symmetry() {
        let c = Curve::new(0, 1).unwrap();
        let p = Point::from_integers(2, 3);
        assert_eq!(c.contains(&p), c.contains(&p.negate()));
    }

    #[test]
    fn twist_moves_points() {
        let c = Curve::new(-4, 0).unwrap();
        let lambda = BigInt::from(3);
        let t = c.twist(&lambda).unwrap();
        assert_eq!(t.a(), &BigInt::from(-324));
        assert_eq!(t.b(), &BigInt::from(0));
        // (2, 0) -> (18, 0)
        assert!(t.contains(&Point::from_integers(18, 0)));
    }
}

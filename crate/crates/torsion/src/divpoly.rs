//! Explicit multiplication-formula polynomials: the order-three quartic
//! `Psi3`, the duplication x-map and the triplication x-map numerator.
//!
//! Inputs are restricted to integer x: Nagell-Lutz makes every torsion
//! x-coordinate integral, and keeping x integral keeps all the divisor
//! reasoning downstream exact.

use crate::curve::Curve;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DivPolyError {
    #[error("x is the abscissa of an order-three point (Psi3(x) = 0)")]
    OrderThreeInput,
    #[error("x is the abscissa of a two-torsion point (x^3 + Ax + B = 0)")]
    TwoTorsionInput,
}

/// `Psi3(x) = 3x^4 + 6Ax^2 + 12Bx - A^2`. An integer on-curve point has
/// order three exactly when this vanishes.
pub fn psi3(c: &Curve, x: &BigInt) -> BigInt {
    let (a, b) = (c.a(), c.b());
    3 * x * x * x * x + 6 * a * x * x + 12 * b * x - a * a
}

/// The numerator `N(A, B, x)` of the triplication x-map
/// `x([3]P) = N(A, B, x) / Psi3(x)^2`.
pub fn triplication_numerator(c: &Curve, x: &BigInt) -> BigInt {
    let (a, b) = (c.a(), c.b());
    let a2 = a * a;
    let a3 = &a2 * a;
    let a4 = &a3 * a;
    let b2 = b * b;
    let x2 = x * x;
    let x3 = &x2 * x;
    let x4 = &x3 * x;
    let x5 = &x4 * x;
    let x6 = &x5 * x;
    let x7 = &x6 * x;
    let x9 = &x7 * &x2;
    x9 - 12 * a * x7
        - 96 * b * x6
        + 30 * &a2 * x5
        - 24 * a * b * x4
        + (36 * &a3 + 48 * &b2) * x3
        + 48 * &a2 * b * x2
        + (96 * a * &b2 + 9 * &a4) * x
        + 8 * b * (&a3 + 8 * &b2)
}

/// `x([3](x, y)) = N(A, B, x) / Psi3(x)^2` for any on-curve y.
pub fn triplication_x(c: &Curve, x: &BigInt) -> Result<BigRational, DivPolyError> {
    let psi = psi3(c, x);
    if psi.is_zero() {
        return Err(DivPolyError::OrderThreeInput);
    }
    Ok(BigRational::new(triplication_numerator(c, x), &psi * &psi))
}

/// `x([2](x, y)) = (x^4 - 2Ax^2 - 8Bx + A^2) / (4(x^3 + Ax + B))`.
pub fn duplication_x(c: &Curve, x: &BigInt) -> Result<BigRational, DivPolyError> {
    let den = c.rhs_at(x);
    if den.is_zero() {
        return Err(DivPolyError::TwoTorsionInput);
    }
    let (a, b) = (c.a(), c.b());
    let num = x * x * x * x - 2 * a * x * x - 8 * b * x + a * a;
    Ok(BigRational::new(num, 4 * den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{add, point_order, scalar_mul, PointOrder};
    use crate::curve::Point;
    use num_rational::BigRational;

    fn curve(a: i64, b: i64) -> Curve {
        Curve::new(a, b).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn psi3_examples() {
        assert_eq!(psi3(&curve(39, -23), &BigInt::from(3)), BigInt::zero());
        assert_eq!(psi3(&curve(0, 1), &BigInt::from(0)), BigInt::zero());
        assert_eq!(psi3(&curve(-4, 0), &BigInt::from(0)), BigInt::from(-16));
    }

    #[test]
    fn psi3_vanishes_exactly_at_order_three() {
        let c = curve(0, 1);
        assert_eq!(point_order(&c, &Point::from_integers(0, 1)), PointOrder::Finite(3));
        // (2, 3) has order 6, psi3 must not vanish there
        assert_ne!(psi3(&c, &BigInt::from(2)), BigInt::zero());
    }

    #[test]
    fn duplication_examples() {
        assert_eq!(duplication_x(&curve(4, 0), &BigInt::from(2)).unwrap(), rat(0));
        assert_eq!(duplication_x(&curve(-432, 8208), &BigInt::from(-12)).unwrap(), rat(24));
        assert_eq!(
            duplication_x(&curve(-4, 0), &BigInt::from(2)),
            Err(DivPolyError::TwoTorsionInput)
        );
    }

    #[test]
    fn triplication_examples() {
        assert_eq!(triplication_x(&curve(-432, 8208), &BigInt::from(-12)).unwrap(), rat(24));
        assert_eq!(
            triplication_x(&curve(0, 1), &BigInt::from(0)),
            Err(DivPolyError::OrderThreeInput)
        );
        // cross-check against group-law composition on (4, 0), P = (2, 4)
        let c = curve(4, 0);
        let p = Point::from_integers(2, 4);
        let three_p = add(&c, &scalar_mul(&c, 2, &p), &p);
        match three_p {
            Point::Affine { x, .. } => {
                assert_eq!(triplication_x(&c, &BigInt::from(2)).unwrap(), x);
            }
            Point::Identity => panic!("[3]P should be affine"),
        }
    }
}

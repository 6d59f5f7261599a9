//! Exact chord-tangent group law on `E(Q)`, point orders, and the
//! Nagell-Lutz torsion oracle used as independent ground truth.

use crate::arith::{divisors, exact_sqrt, is_square, square_part_root};
use crate::curve::{Curve, IntegerPoint, Point};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Group sum of two points on `c`.
pub fn add(c: &Curve, p: &Point, q: &Point) -> Point {
    let (x1, y1) = match p {
        Point::Identity => return q.clone(),
        Point::Affine { x, y } => (x, y),
    };
    let (x2, y2) = match q {
        Point::Identity => return p.clone(),
        Point::Affine { x, y } => (x, y),
    };
    if x1 == x2 && *y1 == -y2 {
        return Point::Identity;
    }
    let lambda = if x1 == x2 {
        // tangent slope (3x^2 + A) / 2y
        let num = BigRational::from(BigInt::from(3)) * x1 * x1 + BigRational::from(c.a().clone());
        num / (BigRational::from(BigInt::from(2)) * y1)
    } else {
        (y2 - y1) / (x2 - x1)
    };
    let x3 = &lambda * &lambda - x1 - x2;
    let y3 = lambda * (x1 - &x3) - y1;
    Point::Affine { x: x3, y: y3 }
}

/// `[2]p`; `Identity` when `y = 0`.
pub fn double(c: &Curve, p: &Point) -> Point {
    add(c, p, p)
}

/// `[k]p` for `k >= 0` by repeated doubling.
pub fn scalar_mul(c: &Curve, k: u64, p: &Point) -> Point {
    let mut acc = Point::Identity;
    let mut base = p.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc = add(c, &acc, &base);
        }
        k >>= 1;
        if k > 0 {
            base = add(c, &base, &base);
        }
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointOrder {
    Finite(u32),
    Infinite,
}

/// Least `n <= 12` with `[n]p = O`, else `Infinite`. Over Q every torsion
/// point has order at most 12, so the iteration never needs to go further.
pub fn point_order(c: &Curve, p: &Point) -> PointOrder {
    let mut acc = Point::Identity;
    for n in 1..=12u32 {
        acc = add(c, &acc, p);
        if acc.is_identity() {
            return PointOrder::Finite(n);
        }
    }
    PointOrder::Infinite
}

/// All integer roots of the monic cubic `x^3 + c2 x^2 + c1 x + c0`,
/// multiplicity collapsed, by divisor scan of `c0` (with the `x = 0` factor
/// split off first when `c0 = 0`).
pub fn integer_cubic_roots(c2: &BigInt, c1: &BigInt, c0: &BigInt) -> Vec<BigInt> {
    let mut roots = Vec::new();
    if c0.is_zero() {
        roots.push(BigInt::zero());
        // remaining quadratic x^2 + c2 x + c1
        let d = c2 * c2 - 4 * c1;
        if let Some(r) = exact_sqrt(&d) {
            for s in [r.clone(), -r] {
                let num = -c2 + &s;
                if (&num % 2).is_zero() {
                    let root = num / 2;
                    if !root.is_zero() {
                        roots.push(root);
                    }
                }
            }
        }
    } else {
        for d in divisors(c0) {
            for x in [d.clone(), -d] {
                if ((&x * &x + c2 * &x + c1) * &x + c0).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Integer points passing the Nagell-Lutz screen: `y = 0` or `y^2 | 4A^3+27B^2`,
/// with `x` an integer root of `x^3 + Ax + B - y^2`. Includes both y-signs.
/// These are torsion *candidates*; callers filter by `point_order`.
pub fn nagell_lutz_candidates(c: &Curve) -> Vec<IntegerPoint> {
    let mut out = Vec::new();
    let ymax = square_part_root(c.disc_quantity());
    let mut ys = vec![BigInt::zero()];
    ys.extend(divisors(&ymax));
    for y in ys {
        let c0 = c.b() - &y * &y;
        for x in integer_cubic_roots(&BigInt::zero(), c.a(), &c0) {
            out.push(IntegerPoint::new(x.clone(), y.clone()));
            if !y.is_zero() {
                out.push(IntegerPoint::new(x, -y.clone()));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// One of Mazur's fifteen group shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TorsionShape {
    /// `Z/nZ` for `n` in `1..=10` or `12`.
    Cyclic(u32),
    /// `Z/2Z x Z/2mZ` for `m` in `1..=4`.
    TwoByTwoN(u32),
}

impl TorsionShape {
    pub fn order(&self) -> u32 {
        match self {
            TorsionShape::Cyclic(n) => *n,
            TorsionShape::TwoByTwoN(m) => 4 * m,
        }
    }

    pub fn is_mazur(&self) -> bool {
        match self {
            TorsionShape::Cyclic(n) => (1..=10).contains(n) || *n == 12,
            TorsionShape::TwoByTwoN(m) => (1..=4).contains(m),
        }
    }

    pub fn all() -> [TorsionShape; 15] {
        [
            TorsionShape::Cyclic(1),
            TorsionShape::Cyclic(2),
            TorsionShape::Cyclic(3),
            TorsionShape::Cyclic(4),
            TorsionShape::Cyclic(5),
            TorsionShape::Cyclic(6),
            TorsionShape::Cyclic(7),
            TorsionShape::Cyclic(8),
            TorsionShape::Cyclic(9),
            TorsionShape::Cyclic(10),
            TorsionShape::Cyclic(12),
            TorsionShape::TwoByTwoN(1),
            TorsionShape::TwoByTwoN(2),
            TorsionShape::TwoByTwoN(3),
            TorsionShape::TwoByTwoN(4),
        ]
    }
}

impl fmt::Display for TorsionShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsionShape::Cyclic(n) => write!(f, "Z/{}", n),
            TorsionShape::TwoByTwoN(m) => write!(f, "Z/2xZ/{}", 2 * m),
        }
    }
}

impl std::str::FromStr for TorsionShape {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim();
        if let Some(rest) = norm.strip_prefix("Z/2xZ/") {
            let k: u32 = rest.parse().map_err(|_| format!("bad shape: {s}"))?;
            if k % 2 != 0 {
                return Err(format!("bad shape: {s}"));
            }
            let shape = TorsionShape::TwoByTwoN(k / 2);
            if !shape.is_mazur() {
                return Err(format!("shape outside Mazur's list: {s}"));
            }
            return Ok(shape);
        }
        if let Some(rest) = norm.strip_prefix("Z/") {
            let n: u32 = rest.parse().map_err(|_| format!("bad shape: {s}"))?;
            let shape = TorsionShape::Cyclic(n);
            if !shape.is_mazur() {
                return Err(format!("shape outside Mazur's list: {s}"));
            }
            return Ok(shape);
        }
        Err(format!("bad shape: {s}"))
    }
}

/// The exact torsion subgroup: shape plus every finite-order point
/// (identity excluded), sorted by `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionGroup {
    pub shape: TorsionShape,
    pub points: Vec<IntegerPoint>,
}

impl TorsionGroup {
    pub fn order(&self) -> u32 {
        self.points.len() as u32 + 1
    }

    pub fn points_of_order(&self, c: &Curve, n: u32) -> Vec<IntegerPoint> {
        self.points
            .iter()
            .filter(|p| point_order(c, &p.to_point()) == PointOrder::Finite(n))
            .cloned()
            .collect()
    }
}

/// Nagell-Lutz torsion oracle: enumerate integer candidates, keep the
/// finite-order ones, and assemble the group shape from the order census.
pub fn torsion_oracle(c: &Curve) -> TorsionGroup {
    let mut points = Vec::new();
    let mut orders = Vec::new();
    for cand in nagell_lutz_candidates(c) {
        match point_order(c, &cand.to_point()) {
            PointOrder::Finite(n) => {
                points.push(cand);
                orders.push(n);
            }
            PointOrder::Infinite => {} // integral point of infinite order
        }
    }
    let n_total = points.len() as u32 + 1;
    let e2 = orders.iter().filter(|&&o| o == 2).count();
    let max_order = orders.iter().copied().max().unwrap_or(1);
    let shape = if e2 == 3 {
        debug_assert_eq!(n_total, 2 * max_order);
        TorsionShape::TwoByTwoN(max_order / 2)
    } else {
        debug_assert!(e2 <= 1);
        debug_assert_eq!(n_total, max_order.max(1));
        TorsionShape::Cyclic(n_total)
    };
    assert!(
        shape.is_mazur(),
        "oracle produced a non-Mazur shape for {c}: {shape}"
    );
    TorsionGroup { shape, points }
}

/// Number of points of order two: the number of integer roots of `x^3+Ax+B`.
pub fn two_torsion_count(c: &Curve) -> usize {
    integer_cubic_roots(&BigInt::zero(), c.a(), c.b()).len()
}

/// `true` when `y^2 = x^3 + Ax + B` has an integer solution with the given x.
pub fn lift_x(c: &Curve, x: &BigInt) -> Option<IntegerPoint> {
    let rhs = c.rhs_at(x);
    exact_sqrt(&rhs).map(|y| IntegerPoint::new(x.clone(), y))
}

/// Convenience: `is_square` re-export for solver modules.
pub(crate) fn rhs_is_square(c: &Curve, x: &BigInt) -> bool {
    is_square(&c.rhs_at(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(a: i64, b: i64) -> Curve {
        Curve::new(a, b).unwrap()
    }

    fn pt(x: i64, y: i64) -> Point {
        Point::from_integers(x, y)
    }

    #[test]
    fn add_two_torsion_chord() {
        let c = curve(-4, 0);
        assert_eq!(add(&c, &pt(0, 0), &pt(2, 0)), pt(-2, 0));
        assert_eq!(add(&c, &pt(2, 0), &pt(2, 0)), Point::Identity);
        let p = pt(2, 0);
        assert_eq!(add(&c, &p, &Point::Identity), p);
    }

    #[test]
    fn double_examples() {
        let c = curve(4, 0);
        assert_eq!(double(&c, &pt(2, 4)), pt(0, 0));
        let c = curve(-4, 0);
        assert_eq!(double(&c, &pt(2, 0)), Point::Identity);
        let c = curve(-432, 8208);
        assert_eq!(double(&c, &pt(-12, 108)), pt(24, -108));
    }

    #[test]
    fn scalar_mul_orders() {
        let c = curve(-432, 8208);
        let p = pt(-12, 108);
        assert_eq!(scalar_mul(&c, 0, &p), Point::Identity);
        assert_eq!(scalar_mul(&c, 5, &p), Point::Identity);
        assert_eq!(point_order(&c, &p), PointOrder::Finite(5));
        let c = curve(4, 0);
        assert_eq!(scalar_mul(&c, 4, &pt(2, 4)), Point::Identity);
        assert_eq!(point_order(&c, &pt(2, 4)), PointOrder::Finite(4));
    }

    #[test]
    fn point_order_examples() {
        let c = curve(0, 1);
        assert_eq!(point_order(&c, &pt(0, 1)), PointOrder::Finite(3));
        assert_eq!(point_order(&c, &pt(0, -1)), PointOrder::Finite(3));
        assert_eq!(point_order(&c, &Point::Identity), PointOrder::Finite(1));
        assert_eq!(point_order(&c, &pt(2, 3)), PointOrder::Finite(6));
    }

    #[test]
    fn cubic_roots_examples() {
        let z = BigInt::zero();
        let roots = integer_cubic_roots(&z, &BigInt::from(-4), &z);
        assert_eq!(roots, vec![BigInt::from(-2), BigInt::zero(), BigInt::from(2)]);
        assert!(integer_cubic_roots(&z, &BigInt::from(1), &BigInt::from(23)).is_empty());
        assert_eq!(integer_cubic_roots(&z, &z, &z), vec![BigInt::zero()]);
    }

    #[test]
    fn oracle_basic_shapes() {
        assert_eq!(torsion_oracle(&curve(-4, 0)).shape, TorsionShape::TwoByTwoN(1));
        assert_eq!(torsion_oracle(&curve(0, 1)).shape, TorsionShape::Cyclic(6));
        assert_eq!(torsion_oracle(&curve(1, 23)).shape, TorsionShape::Cyclic(1));
        assert_eq!(torsion_oracle(&curve(-92, 480)).shape, TorsionShape::Cyclic(1));
        assert_eq!(torsion_oracle(&curve(-432, 8208)).shape, TorsionShape::Cyclic(5));
    }

    #[test]
    fn oracle_point_sets() {
        let g = torsion_oracle(&curve(-4, 0));
        let xs: Vec<i64> = g.points.iter().map(|p| i64::try_from(&p.x).unwrap()).collect();
        assert_eq!(xs, vec![-2, 0, 2]);
        assert!(g.points.iter().all(|p| p.y.is_zero()));

        let g = torsion_oracle(&curve(0, 1));
        assert_eq!(g.order(), 6);
        for p in &g.points {
            assert!(p.satisfies_nagell_lutz(&curve(0, 1)));
        }
    }

    #[test]
    fn shape_display_and_parse() {
        assert_eq!(TorsionShape::Cyclic(5).to_string(), "Z/5");
        assert_eq!(TorsionShape::TwoByTwoN(4).to_string(), "Z/2xZ/8");
        assert_eq!("Z/12".parse::<TorsionShape>().unwrap(), TorsionShape::Cyclic(12));
        assert_eq!("Z/2xZ/6".parse::<TorsionShape>().unwrap(), TorsionShape::TwoByTwoN(3));
        assert!("Z/11".parse::<TorsionShape>().is_err());
    }
}

//! The diophantine order systems: for `n ∈ {2, 3, 4, 5, 7, 8, 9}` a system of
//! at most four (five in one pre-elimination form) quasi-homogeneous
//! polynomial relations
//!
//! ```text
//!   P_n(z) = 6^2 * A,   Q_n(z) = 6^3 * B,   R_n(z) = 0,   S_n(z) = 0
//! ```
//!
//! that has an integral solution exactly when the curve `Y^2 = X^3 + AX + B`
//! has a rational point of order `n`. Witness vectors reconstruct the order-n
//! points through closed forms, and conversely every order-n point back-maps
//! to an integral witness.
//!
//! Every row implemented here has been validated two ways: symbolically
//! (each final system is the stated elimination of its pre-elimination form)
//! and numerically against group-law data on curves with known torsion. Two
//! rows that circulate with transcription slips are kept in [`variants`] as
//! documented evaluators; see `docs/derivations.md` for the full analysis.

use crate::arith::{exact_div, exact_sqrt};
use crate::curve::{Curve, CurveError, IntegerPoint};
use crate::group::{point_order, scalar_mul, PointOrder};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SigmaTag {
    /// Order two, existence of at least one point.
    S2One,
    /// Order two, existence of three points.
    S2Three,
    S3,
    S4,
    S5,
    S7,
    S8,
    S9,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SigmaVariant {
    /// The eliminated/renamed form.
    Final,
    /// The pre-elimination form (exists for S4, S5, S7, S8).
    Prime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SigmaId {
    pub tag: SigmaTag,
    pub variant: SigmaVariant,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SigmaError {
    #[error("{id} expects {expected} coordinates, got {got}")]
    ArityMismatch { id: SigmaId, expected: usize, got: usize },
    #[error("{0:?} has no pre-elimination variant")]
    NoPrimeVariant(SigmaTag),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("arity: {0}")]
    Arity(#[from] SigmaError),
    #[error("residual is not zero: not a witness")]
    NotAWitness,
    #[error("witness implies a singular curve")]
    SingularCurve(#[from] CurveError),
    #[error("reconstruction is not integral")]
    NonIntegral,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtractError {
    #[error("point does not have order {expected}")]
    WrongOrder { expected: u32 },
    #[error("no integral witness: {reason}")]
    NoIntegralWitness { reason: String },
}

impl SigmaId {
    pub fn new(tag: SigmaTag, variant: SigmaVariant) -> Result<Self, SigmaError> {
        if variant == SigmaVariant::Prime
            && !matches!(tag, SigmaTag::S4 | SigmaTag::S5 | SigmaTag::S7 | SigmaTag::S8)
        {
            return Err(SigmaError::NoPrimeVariant(tag));
        }
        Ok(SigmaId { tag, variant })
    }

    pub fn final_of(tag: SigmaTag) -> Self {
        SigmaId { tag, variant: SigmaVariant::Final }
    }

    pub fn prime_of(tag: SigmaTag) -> Result<Self, SigmaError> {
        SigmaId::new(tag, SigmaVariant::Prime)
    }

    /// The point order this system certifies.
    pub fn order(&self) -> u32 {
        match self.tag {
            SigmaTag::S2One | SigmaTag::S2Three => 2,
            SigmaTag::S3 => 3,
            SigmaTag::S4 => 4,
            SigmaTag::S5 => 5,
            SigmaTag::S7 => 7,
            SigmaTag::S8 => 8,
            SigmaTag::S9 => 9,
        }
    }

    pub fn arity(&self) -> usize {
        use SigmaTag::*;
        use SigmaVariant::*;
        match (self.tag, self.variant) {
            (S2One, _) | (S2Three, _) | (S3, _) => 2,
            (S4, Final) => 2,
            (S4, Prime) => 3,
            (S5, Final) => 3,
            (S5, Prime) => 4,
            (S7, Final) => 4,
            (S7, Prime) => 5,
            (S8, Final) => 3,
            (S8, Prime) => 4,
            (S9, _) => 3,
        }
    }

    /// Quasi-homogeneity weights: rescaling `z_i -> l^{w_i} z_i` maps the
    /// witness set of `(A, B)` onto the witness set of `(l^4 A, l^6 B)`.
    pub fn weights(&self) -> &'static [u32] {
        use SigmaTag::*;
        use SigmaVariant::*;
        match (self.tag, self.variant) {
            (S2One, _) => &[4, 2],
            (S2Three, _) => &[2, 2],
            (S3, _) => &[1, 3],
            (S4, Final) => &[2, 1],
            (S4, Prime) => &[2, 2, 1],
            (S5, Final) => &[2, 2, 1],
            (S5, Prime) => &[2, 2, 2, 1],
            (S7, Final) => &[2, 2, 1, 2],
            (S7, Prime) => &[2, 2, 2, 2, 1],
            (S8, Final) => &[1, 1, 1],
            (S8, Prime) => &[2, 1, 1, 1],
            (S9, _) => &[1, 3, 2],
        }
    }

    /// Weighted degrees of the constraint rows (R, S, and for the order-7
    /// pre-elimination form a fifth row T), in order.
    pub fn constraint_degrees(&self) -> &'static [u32] {
        use SigmaTag::*;
        use SigmaVariant::*;
        match (self.tag, self.variant) {
            (S2One, _) | (S2Three, _) | (S3, _) | (S4, Final) => &[],
            (S4, Prime) => &[2],
            (S5, Final) => &[4],
            (S5, Prime) => &[4, 2],
            (S7, Final) => &[4, 4],
            (S7, Prime) => &[4, 4, 2],
            (S8, Final) => &[2],
            (S8, Prime) => &[2, 2],
            (S9, _) => &[18],
        }
    }

    pub fn all_ids() -> Vec<SigmaId> {
        use SigmaTag::*;
        let mut out: Vec<SigmaId> = [S2One, S2Three, S3, S4, S5, S7, S8, S9]
            .into_iter()
            .map(SigmaId::final_of)
            .collect();
        for tag in [S4, S5, S7, S8] {
            out.push(SigmaId::prime_of(tag).unwrap());
        }
        out
    }
}

impl fmt::Display for SigmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.tag {
            SigmaTag::S2One => "S2(1)",
            SigmaTag::S2Three => "S2(3)",
            SigmaTag::S3 => "S3",
            SigmaTag::S4 => "S4",
            SigmaTag::S5 => "S5",
            SigmaTag::S7 => "S7",
            SigmaTag::S8 => "S8",
            SigmaTag::S9 => "S9",
        };
        match self.variant {
            SigmaVariant::Final => write!(f, "{name}"),
            SigmaVariant::Prime => write!(f, "{name}'"),
        }
    }
}

/// An integral solution of one system, certifying order-n points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SigmaWitness {
    pub id: SigmaId,
    pub z: Vec<BigInt>,
}

impl SigmaWitness {
    pub fn new(id: SigmaId, z: Vec<BigInt>) -> Self {
        SigmaWitness { id, z }
    }

    /// The weight-flip image `z_i -> (-1)^{w_i} z_i`; certifies the same
    /// unordered point pair on the same curve.
    pub fn weight_flip(&self) -> SigmaWitness {
        let z = self
            .z
            .iter()
            .zip(self.id.weights())
            .map(|(zi, w)| if w % 2 == 1 { -zi } else { zi.clone() })
            .collect();
        SigmaWitness { id: self.id, z }
    }

    /// Lexicographically smallest representative of the sign class.
    pub fn canonical(&self) -> SigmaWitness {
        let mut reps = vec![self.clone(), self.weight_flip()];
        if self.id.tag == SigmaTag::S2Three {
            // z1 enters through its square only
            for i in 0..2 {
                let mut w = reps[i].clone();
                w.z[0] = -w.z[0].clone();
                reps.push(w);
            }
        }
        reps.into_iter().min_by(|a, b| a.z.cmp(&b.z)).unwrap()
    }
}

impl fmt::Display for SigmaWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zs: Vec<String> = self.z.iter().map(|z| z.to_string()).collect();
        write!(f, "{}({})", self.id, zs.join(", "))
    }
}

/// Exact residual of the system rows against `(6^2 A, 6^3 B, 0, 0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaResidual {
    /// `P_n(z) - 36 A`
    pub rp: BigInt,
    /// `Q_n(z) - 216 B`
    pub rq: BigInt,
    /// first constraint row, when the system has one
    pub rr: Option<BigInt>,
    /// second constraint row
    pub rs: Option<BigInt>,
    /// third constraint row (order-7 pre-elimination form only)
    pub rt: Option<BigInt>,
}

impl SigmaResidual {
    pub fn is_zero(&self) -> bool {
        self.rp.is_zero()
            && self.rq.is_zero()
            && self.rr.as_ref().map_or(true, Zero::is_zero)
            && self.rs.as_ref().map_or(true, Zero::is_zero)
            && self.rt.as_ref().map_or(true, Zero::is_zero)
    }

    pub fn to_vec(&self) -> Vec<BigInt> {
        let mut v = vec![self.rp.clone(), self.rq.clone()];
        v.extend(self.rr.clone());
        v.extend(self.rs.clone());
        v.extend(self.rt.clone());
        v
    }
}

impl fmt::Display for SigmaResidual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_vec().iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn check_arity(id: SigmaId, z: &[BigInt]) -> Result<(), SigmaError> {
    if z.len() != id.arity() {
        return Err(SigmaError::ArityMismatch { id, expected: id.arity(), got: z.len() });
    }
    Ok(())
}

/// `P_n(z)`, the polynomial compared with `6^2 A`.
pub fn eval_p(id: SigmaId, z: &[BigInt]) -> BigInt {
    use SigmaTag::*;
    use SigmaVariant::*;
    match (id.tag, id.variant) {
        (S2One, _) => 36 * (&z[0] - &z[1] * &z[1]),
        (S2Three, _) => -9 * (&z[0] * &z[0] + 3 * &z[1] * &z[1]),
        (S3, _) => {
            let z14 = z[0].pow(4);
            36 * (27 * z14 + 6 * &z[0] * &z[1])
        }
        (S4, Final) => {
            36 * (-3 * &z[0] * &z[0] + 6 * &z[0] * &z[1] * &z[1] - 2 * z[1].pow(4))
        }
        // 2A = 3 x1^2 - x2^2, scaled by 18
        (S4, Prime) => 18 * (3 * &z[0] * &z[0] - &z[1] * &z[1]),
        (S5, Final) => {
            let d = &z[0] - &z[1];
            18 * (&d * &d - 6 * &z[0] * &z[0] + d * &z[2] * &z[2])
        }
        (S5, Prime) | (S7, Prime) => {
            // A = -x1^2 - x1 x2 - x2^2 + (x1 - x2) * u  with u = x3 (order 5)
            // or u = x4 (order 7)
            let u = if id.tag == S5 { &z[2] } else { &z[3] };
            36 * (-(&z[0] * &z[0]) - &z[0] * &z[1] - &z[1] * &z[1] + (&z[0] - &z[1]) * u)
        }
        (S7, Final) => {
            let s = &z[0] + &z[1];
            -36 * (&s * &s - &z[0] * &z[1] + &z[3] * (&z[1] - &z[0]))
        }
        (S8, Final) => {
            let z12 = &z[0] * &z[0];
            let z22 = &z[1] * &z[1];
            -12 * (&z12 * &z12 - 4 * &z12 * &z22 + &z22 * &z22)
        }
        (S8, Prime) => {
            36 * (-3 * &z[0] * &z[0] + 6 * &z[0] * &z[1] * &z[1] - 2 * z[1].pow(4))
        }
        (S9, _) => 36 * (6 * &z[0] * &z[1] - 27 * z[0].pow(4)),
    }
}

/// `Q_n(z)`, the polynomial compared with `6^3 B`.
pub fn eval_q(id: SigmaId, z: &[BigInt]) -> BigInt {
    use SigmaTag::*;
    use SigmaVariant::*;
    match (id.tag, id.variant) {
        (S2One, _) => 216 * &z[0] * &z[1],
        (S2Three, _) => 54 * (z[1].pow(3) - &z[1] * &z[0] * &z[0]),
        (S3, _) => 216 * (&z[1] * &z[1] - 27 * z[0].pow(6)),
        (S4, Final) | (S8, Prime) => {
            let z22 = &z[1] * &z[1];
            216 * (2 * &z[0] - &z22)
                * (&z[0] * &z[0] + 2 * &z[0] * &z22 - &z22 * &z22)
        }
        // 8B = (x2 + x1)(7 x1^2 + 2 x1 x2 - x2^2), scaled by 27
        (S4, Prime) => {
            27 * (&z[1] + &z[0])
                * (7 * &z[0] * &z[0] + 2 * &z[0] * &z[1] - &z[1] * &z[1])
        }
        (S5, Final) => {
            54 * (&z[0] + &z[1])
                * (6 * &z[0] * &z[0] - 2 * &z[0] * &z[1] + (&z[1] - &z[0]) * &z[2] * &z[2])
        }
        // 4B = -(x1+x2)(-3x1^2 + 2x1x2 - 3x2^2 + 2(x1-x2)x3), scaled by 54
        (S5, Prime) => {
            -54 * (&z[0] + &z[1])
                * (-3 * &z[0] * &z[0] + 2 * &z[0] * &z[1] - 3 * &z[1] * &z[1]
                    + 2 * (&z[0] - &z[1]) * &z[2])
        }
        (S7, Final) => {
            // verified row: 54 [ z3^2 (z1-z2)^2 + 4 z1 ( z2(z1+z2) + z4(z2-z1) ) ];
            // the z2-prefactored variant is kept in `variants::q7_final_transcribed`.
            let d = &z[0] - &z[1];
            54 * (&z[2] * &z[2] * &d * &d
                + 4 * &z[0] * (&z[1] * (&z[0] + &z[1]) + &z[3] * (&z[1] - &z[0])))
        }
        // 4B = 3x1^3 + x3 x1^2 + 3 x2^2 x1 + x2^2 x3 - 2 x1 x2 x3 + 2 x2^3
        //      + 2 (x2^2 - x1^2) x4, scaled by 54
        (S7, Prime) => {
            let (x1, x2, x3, x4) = (&z[0], &z[1], &z[2], &z[3]);
            54 * (3 * x1.pow(3) + x3 * x1 * x1 + 3 * x2 * x2 * x1 + x2 * x2 * x3
                - 2 * x1 * x2 * x3
                + 2 * x2.pow(3)
                + 2 * (x2 * x2 - x1 * x1) * x4)
        }
        (S8, Final) => {
            let z12 = &z[0] * &z[0];
            let z14 = &z12 * &z12;
            let z22 = &z[1] * &z[1];
            let z24 = &z22 * &z22;
            8 * (&z12 - 2 * &z22) * (2 * &z14 - 8 * &z12 * &z22 - &z24)
        }
        (S9, _) => 216 * (&z[1] * &z[1] - 18 * z[0].pow(3) * &z[1] + 54 * z[0].pow(6)),
    }
}

/// The degree-9 constraint of the order-9 system (the triplication relation
/// after the shift `z3 = x - 3 z1^2`).
pub fn r9(z1: &BigInt, z2: &BigInt, z3: &BigInt) -> BigInt {
    let z13 = z1.pow(3);
    z3.pow(9) - 72 * z1 * z2 * z3.pow(7)
        - 48 * (9 * &z13 + 2 * z2) * z2 * z3.pow(6)
        - 864 * z1 * z1 * z2 * z2 * z3.pow(5)
        - 144 * z1 * z2.pow(3) * z3.pow(4)
        + 48 * (36 * &z13 + z2) * z2.pow(3) * z3.pow(3)
        + 1728 * z1 * z1 * z2.pow(4) * z3 * z3
        + 576 * z1 * z2.pow(5) * z3
        + 64 * z2.pow(6)
}

/// Constraint rows `R, S[, T]` of the system, in order.
pub fn eval_constraints(id: SigmaId, z: &[BigInt]) -> Vec<BigInt> {
    use SigmaTag::*;
    use SigmaVariant::*;
    match (id.tag, id.variant) {
        (S2One, _) | (S2Three, _) | (S3, _) | (S4, Final) => vec![],
        // 2 x3^2 - 3 x1 + x2
        (S4, Prime) => vec![2 * &z[2] * &z[2] - 3 * &z[0] + &z[1]],
        (S5, Final) => {
            let d = &z[0] - &z[1];
            vec![z[2].pow(4) - 6 * &z[2] * &z[2] * (&z[0] + &z[1]) + &d * &d]
        }
        (S5, Prime) => vec![
            &z[2] * &z[2] - (2 * &z[0] + &z[1]) * (&z[0] + 2 * &z[1]),
            &z[3] * &z[3] - (3 * &z[0] + 2 * &z[2] + 3 * &z[1]),
        ],
        (S7, Final) => {
            let m = 2 * &z[0] + &z[1];
            let r = {
                let u = &m + &z[3];
                &u * &u - &z[2] * &z[2] * &m
            };
            let s = -z[2].pow(4)
                + (5 * &z[0] + &z[1] + 6 * &z[3]) * &z[2] * &z[2]
                + (-3 * &z[0] * &z[0] + 3 * &z[1] * &z[1]
                    - 8 * &z[3] * &z[3]
                    - 18 * &z[0] * &z[3]
                    - 6 * &z[1] * &z[3]);
            vec![r, s]
        }
        (S7, Prime) => {
            let (x1, x2, x3, x4, x5) = (&z[0], &z[1], &z[2], &z[3], &z[4]);
            vec![
                x4 * x4 - (x2 + 2 * x1) * (x1 + x3 + x2),
                3 * x1 * x1 - x1 * x3 + x1 * x2 - x3 * x3 - 3 * x2 * x3 + x2 * x2
                    - 2 * (x1 - x3) * x4,
                x5 * x5 - (3 * x1 + 2 * x2 + 2 * x4 + x3),
            ]
        }
        (S8, Final) => vec![&z[2] * &z[2] - &z[0] * (2 * &z[1] + &z[0])],
        (S8, Prime) => vec![
            // verified row: z2^2 + z3^2 = 3 z1; the z3^2+z4^2 variant is kept
            // in `variants::s8_prime_first_constraint_transcribed`.
            &z[1] * &z[1] + &z[2] * &z[2] - 3 * &z[0],
            &z[3] * &z[3] - &z[1] * (2 * &z[2] + &z[1]),
        ],
        (S9, _) => vec![r9(&z[0], &z[1], &z[2])],
    }
}

/// Exact residual vector of `z` against the system for curve `c`.
pub fn residual(id: SigmaId, z: &[BigInt], c: &Curve) -> Result<SigmaResidual, SigmaError> {
    check_arity(id, z)?;
    let rp = eval_p(id, z) - 36 * c.a();
    let rq = eval_q(id, z) - 216 * c.b();
    let cons = eval_constraints(id, z);
    let mut it = cons.into_iter();
    Ok(SigmaResidual { rp, rq, rr: it.next(), rs: it.next(), rt: it.next() })
}

/// The curve implied by the witness, i.e. `(P(z)/36, Q(z)/216)`, when both
/// divisions are exact and the curve is nonsingular.
pub fn implied_curve(id: SigmaId, z: &[BigInt]) -> Result<Curve, WitnessError> {
    check_arity(id, z).map_err(WitnessError::Arity)?;
    let a = exact_div(&eval_p(id, z), &BigInt::from(36)).ok_or(WitnessError::NonIntegral)?;
    let b = exact_div(&eval_q(id, z), &BigInt::from(216)).ok_or(WitnessError::NonIntegral)?;
    Ok(Curve::new(a, b)?)
}

/// The full set of order-n points encoded by a residual-zero witness, plus
/// the implied curve. Both y-signs are always included; for orders 5 and 7
/// the companion x-coordinates are reconstructed as well.
pub fn points_from_witness(
    id: SigmaId,
    z: &[BigInt],
) -> Result<(Curve, Vec<IntegerPoint>), WitnessError> {
    let c = implied_curve(id, z)?;
    if !eval_constraints(id, z).iter().all(Zero::is_zero) {
        return Err(WitnessError::NotAWitness);
    }
    let two = BigInt::from(2);
    let mut pts: Vec<IntegerPoint> = Vec::new();
    let push_pair = |pts: &mut Vec<IntegerPoint>, x: BigInt, y: BigInt| {
        if !y.is_zero() {
            pts.push(IntegerPoint::new(x.clone(), -y.clone()));
        }
        pts.push(IntegerPoint::new(x, y));
    };
    use SigmaTag::*;
    use SigmaVariant::*;
    match (id.tag, id.variant) {
        (S2One, _) => {
            pts.push(IntegerPoint::new(-z[1].clone(), BigInt::zero()));
        }
        (S2Three, _) => {
            pts.push(IntegerPoint::new(-z[1].clone(), BigInt::zero()));
            for sign in [1, -1] {
                let num = &z[1] + sign * &z[0];
                let r = exact_div(&num, &two).ok_or(WitnessError::NonIntegral)?;
                pts.push(IntegerPoint::new(r, BigInt::zero()));
            }
            pts.sort();
            pts.dedup();
            if pts.len() != 3 {
                return Err(WitnessError::NotAWitness);
            }
        }
        (S3, _) => {
            let x = 3 * &z[0] * &z[0];
            let y = 9 * z[0].pow(3) + &z[1];
            push_pair(&mut pts, x, y);
        }
        (S4, Final) => {
            let y = &z[1] * (3 * &z[0] - &z[1] * &z[1]);
            push_pair(&mut pts, z[0].clone(), y);
        }
        (S4, Prime) => {
            let y2 = &z[2] * (3 * &z[0] + &z[1]);
            let y = exact_div(&y2, &two).ok_or(WitnessError::NonIntegral)?;
            push_pair(&mut pts, z[0].clone(), y);
        }
        (S5, Final) => {
            let d = &z[0] - &z[1];
            let y = exact_div(&(&d * &z[2]), &two).ok_or(WitnessError::NonIntegral)?;
            push_pair(&mut pts, z[0].clone(), y);
            // companion x-coordinate: t = (z1 - z2)/z3 satisfies
            // t^2 = 6(z1 + z2) - z3^2 by the constraint row
            if !z[2].is_zero() {
                if let Some(t) = exact_div(&d, &z[2]) {
                    let y2 = exact_div(&(&d * &t), &two).ok_or(WitnessError::NonIntegral)?;
                    push_pair(&mut pts, z[1].clone(), y2);
                }
            }
        }
        (S5, Prime) => {
            let d = &z[0] - &z[1];
            let y = exact_div(&(&d * &z[3]), &two).ok_or(WitnessError::NonIntegral)?;
            push_pair(&mut pts, z[0].clone(), y);
            let t2 = 3 * &z[0] - 2 * &z[2] + 3 * &z[1];
            if let Some(t) = exact_sqrt(&t2) {
                let y2 = exact_div(&(&d * &t), &two).ok_or(WitnessError::NonIntegral)?;
                push_pair(&mut pts, z[1].clone(), y2);
            }
        }
        (S7, Final) | (S7, Prime) => {
            let (x1, x2, x5) = match id.variant {
                Final => (&z[0], &z[1], &z[2]),
                Prime => (&z[0], &z[1], &z[4]),
            };
            let d = x1 - x2;
            let y = exact_div(&(&d * x5), &two).ok_or(WitnessError::NonIntegral)?;
            push_pair(&mut pts, x1.clone(), y);
            // companion x-coordinates x2 and x3 lift by exact square root
            let x3 = match id.variant {
                Final => &z[2] * &z[2] - 3 * &z[0] - 2 * &z[1] - 2 * &z[3],
                Prime => z[2].clone(),
            };
            for x in [x2.clone(), x3] {
                if let Some(y) = exact_sqrt(&c.rhs_at(&x)) {
                    push_pair(&mut pts, x, y);
                }
            }
        }
        (S8, Final) => {
            let sum = &z[0] * &z[0] + &z[1] * &z[1];
            let old_z1 = exact_div(&sum, &BigInt::from(3)).ok_or(WitnessError::NonIntegral)?;
            let v = &old_z1 + &z[1] * (&z[0] + &z[2]);
            let t = &z[1] * &z[2] * (&z[0] + &z[1] + &z[2]);
            push_pair(&mut pts, v, t);
        }
        (S8, Prime) => {
            let v = &z[0] + &z[2] * (&z[1] + &z[3]);
            let t = &z[2] * &z[3] * (&z[1] + &z[2] + &z[3]);
            push_pair(&mut pts, v, t);
        }
        (S9, _) => {
            let x = &z[2] + 3 * &z[0] * &z[0];
            let y2 = c.rhs_at(&x);
            let y = exact_sqrt(&y2).ok_or(WitnessError::NotAWitness)?;
            push_pair(&mut pts, x, y);
        }
    }
    for p in &pts {
        if !c.contains_integer(p) {
            return Err(WitnessError::NotAWitness);
        }
    }
    pts.sort();
    pts.dedup();
    Ok((c, pts))
}

/// `true` iff the residual vanishes and the reconstructed points sit on `c`
/// with exact order `n`.
pub fn verify_witness(id: SigmaId, z: &[BigInt], c: &Curve) -> Result<bool, SigmaError> {
    let res = residual(id, z, c)?;
    if !res.is_zero() {
        return Ok(false);
    }
    let n = id.order();
    match points_from_witness(id, z) {
        Ok((implied, pts)) => {
            if &implied != c || pts.is_empty() {
                return Ok(false);
            }
            Ok(pts
                .iter()
                .all(|p| point_order(c, &p.to_point()) == PointOrder::Finite(n)))
        }
        Err(_) => Ok(false),
    }
}

fn integer_coords(p: &crate::curve::Point) -> Option<(BigInt, BigInt)> {
    match p {
        crate::curve::Point::Affine { x, y } if x.is_integer() && y.is_integer() => {
            Some((x.to_integer(), y.to_integer()))
        }
        _ => None,
    }
}

/// Closed-form back-maps from an order-n point to its integral witnesses.
/// Returns every valid vector for the given base point (signs included).
/// `NoIntegralWitness` signals that a required square root or exact division
/// failed, which would contradict the order characterization.
pub fn extract_witness(
    c: &Curve,
    id: SigmaId,
    p: &IntegerPoint,
) -> Result<Vec<SigmaWitness>, ExtractError> {
    let n = id.order();
    if point_order(c, &p.to_point()) != PointOrder::Finite(n) {
        return Err(ExtractError::WrongOrder { expected: n });
    }
    let no = |reason: &str| ExtractError::NoIntegralWitness { reason: reason.to_string() };
    let mut out: Vec<SigmaWitness> = Vec::new();
    use SigmaTag::*;
    use SigmaVariant::*;
    match (id.tag, id.variant) {
        (S2One, _) => {
            let z2 = -p.x.clone();
            let z1 = c.a() + &z2 * &z2;
            out.push(SigmaWitness::new(id, vec![z1, z2]));
        }
        (S2Three, _) => {
            let roots = crate::group::integer_cubic_roots(&BigInt::zero(), c.a(), c.b());
            if roots.len() != 3 {
                return Err(no("curve does not have three rational two-torsion points"));
            }
            let others: Vec<&BigInt> = roots.iter().filter(|r| **r != p.x).collect();
            let z2 = others[0] + others[1];
            let z1 = (others[0] - others[1]).abs();
            out.push(SigmaWitness::new(id, vec![z1.clone(), z2.clone()]));
            out.push(SigmaWitness::new(id, vec![-z1, z2]));
        }
        (S3, _) => {
            let x_div3 = exact_div(&p.x, &BigInt::from(3))
                .ok_or_else(|| no("order-3 abscissa not divisible by 3"))?;
            let r = exact_sqrt(&x_div3).ok_or_else(|| no("x/3 is not a perfect square"))?;
            for z1 in [r.clone(), -r] {
                let z2 = &p.y - 9 * z1.pow(3);
                if &(27 * z1.pow(4) + 6 * &z1 * &z2) == c.a() {
                    out.push(SigmaWitness::new(id, vec![z1, z2]));
                }
            }
        }
        (S4, Final) | (S4, Prime) => {
            let x22 = 3 * &p.x * &p.x - 2 * c.a();
            let r = exact_sqrt(&x22).ok_or_else(|| no("3x^2 - 2A is not a perfect square"))?;
            for x2 in [r.clone(), -r] {
                let z22 = exact_div(&(3 * &p.x - &x2), &BigInt::from(2));
                let Some(z22) = z22 else { continue };
                let Some(z2) = exact_sqrt(&z22) else { continue };
                for z2 in if z2.is_zero() { vec![z2.clone()] } else { vec![z2.clone(), -z2] } {
                    let w = match id.variant {
                        Final => SigmaWitness::new(id, vec![p.x.clone(), z2.clone()]),
                        Prime => SigmaWitness::new(id, vec![p.x.clone(), x2.clone(), z2.clone()]),
                    };
                    if verify_witness(id, &w.z, c).unwrap_or(false) {
                        out.push(w);
                    }
                }
            }
        }
        (S5, Final) | (S5, Prime) => {
            let p2 = scalar_mul(c, 2, &p.to_point());
            let (x2, _) = integer_coords(&p2).ok_or_else(|| no("[2]P is not integral"))?;
            let d = &p.x - &x2;
            let z3 = exact_div(&(2 * &p.y), &d)
                .ok_or_else(|| no("(x1 - x2) does not divide 2 y1"))?;
            match id.variant {
                Final => out.push(SigmaWitness::new(id, vec![p.x.clone(), x2, z3])),
                Prime => {
                    // x3 is pinned by the A-row since x1 != x2
                    let num = c.a() + &p.x * &p.x + &p.x * &x2 + &x2 * &x2;
                    let x3 = exact_div(&num, &d).ok_or_else(|| no("x3 is not integral"))?;
                    out.push(SigmaWitness::new(id, vec![p.x.clone(), x2, x3, z3]));
                }
            }
        }
        (S7, Final) | (S7, Prime) => {
            let p2 = scalar_mul(c, 2, &p.to_point());
            let p3 = scalar_mul(c, 3, &p.to_point());
            let (x2, _) = integer_coords(&p2).ok_or_else(|| no("[2]P is not integral"))?;
            let (x3, _) = integer_coords(&p3).ok_or_else(|| no("[3]P is not integral"))?;
            let (x1, y1) = (&p.x, &p.y);
            let num = 3 * x1 * x1 + x1 * &x2 + &x2 * &x2 - x1 * &x3 - 3 * &x2 * &x3 - &x3 * &x3;
            let z4 = exact_div(&num, &(2 * (x1 - &x3)))
                .ok_or_else(|| no("z4 back-map is not integral"))?;
            let z3 = exact_div(&(2 * y1), &(x1 - &x2))
                .ok_or_else(|| no("(x1 - x2) does not divide 2 y1"))?;
            match id.variant {
                Final => out.push(SigmaWitness::new(id, vec![x1.clone(), x2, z3, z4])),
                Prime => out.push(SigmaWitness::new(id, vec![x1.clone(), x2, x3, z4, z3])),
            }
        }
        (S8, Final) | (S8, Prime) => {
            let p2 = scalar_mul(c, 2, &p.to_point());
            let (x4, y4) = integer_coords(&p2).ok_or_else(|| no("[2]P is not integral"))?;
            let four = IntegerPoint::new(x4, y4);
            let quads = extract_witness(c, SigmaId::final_of(S4), &four)?;
            for q in quads {
                let (z1, z2) = (&q.z[0], &q.z[1]);
                let z32 = 3 * z1 - z2 * z2;
                let Some(z3abs) = exact_sqrt(&z32) else { continue };
                for z3 in if z3abs.is_zero() { vec![z3abs.clone()] } else { vec![z3abs.clone(), -z3abs.clone()] } {
                    let z42 = z2 * (2 * &z3 + z2);
                    let Some(z4abs) = exact_sqrt(&z42) else { continue };
                    for z4 in if z4abs.is_zero() { vec![z4abs.clone()] } else { vec![z4abs.clone(), -z4abs.clone()] } {
                        let v = z1 + &z3 * (z2 + &z4);
                        if v != p.x {
                            continue;
                        }
                        let zp = vec![z1.clone(), z2.clone(), z3.clone(), z4.clone()];
                        let w = match id.variant {
                            Final => SigmaWitness::new(id, zp[1..].to_vec()),
                            Prime => SigmaWitness::new(id, zp),
                        };
                        if verify_witness(id, &w.z, c).unwrap_or(false) {
                            out.push(w);
                        }
                    }
                }
            }
            if out.is_empty() {
                return Err(no("no integral (z3, z4) pair reaches the point"));
            }
        }
        (S9, _) => {
            let p3 = scalar_mul(c, 3, &p.to_point());
            let (x3, y3) = integer_coords(&p3).ok_or_else(|| no("[3]P is not integral"))?;
            let x_div3 = exact_div(&x3, &BigInt::from(3))
                .ok_or_else(|| no("x([3]P) not divisible by 3"))?;
            let r = exact_sqrt(&x_div3).ok_or_else(|| no("x([3]P)/3 is not a square"))?;
            let z3 = &p.x - &x3;
            for z1 in [r.clone(), -r] {
                for z2 in [y3.clone(), -y3.clone()] {
                    if &(6 * &z1 * &z2 - 27 * z1.pow(4)) == c.a()
                        && r9(&z1, &z2, &z3).is_zero()
                    {
                        out.push(SigmaWitness::new(id, vec![z1.clone(), z2, z3.clone()]));
                    }
                }
            }
            if out.is_empty() {
                return Err(no("no sign pairing matches the A-row"));
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// A witness together with the auxiliary square-root values that recover the
/// companion y-coordinates: order 5 carries `t` with `t^2 = 3x1 - 2x3 + 3x2`;
/// order 7 carries `(s, t)`, the analogous values of the witnesses based at
/// `[2]P` and `[3]P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedWitness {
    pub base: SigmaWitness,
    pub aux: Vec<BigInt>,
}

/// Computes the auxiliary values for order-5 and order-7 witnesses. Returns
/// the witness unchanged (empty aux) for all other systems.
pub fn extend_witness(c: &Curve, w: &SigmaWitness) -> Result<ExtendedWitness, WitnessError> {
    let mut aux = Vec::new();
    match (w.id.tag, w.id.variant) {
        (SigmaTag::S5, SigmaVariant::Final) => {
            // t = (z1 - z2) / z3, integral whenever the constraint row vanishes
            let d = &w.z[0] - &w.z[1];
            let t = exact_div(&d, &w.z[2]).ok_or(WitnessError::NonIntegral)?;
            aux.push(t);
        }
        (SigmaTag::S7, SigmaVariant::Final) => {
            let (_, pts) = points_from_witness(w.id, &w.z)?;
            let base = pts
                .iter()
                .find(|p| p.x == w.z[0] && !p.y.is_negative())
                .ok_or(WitnessError::NotAWitness)?;
            for k in [2u64, 3] {
                let pk = scalar_mul(c, k, &base.to_point());
                let p2k = scalar_mul(c, 2 * k, &base.to_point());
                let (xk, yk) = match &pk {
                    crate::curve::Point::Affine { x, y } => (x.to_integer(), y.to_integer()),
                    _ => return Err(WitnessError::NotAWitness),
                };
                let (x2k, _) = match &p2k {
                    crate::curve::Point::Affine { x, y } => (x.to_integer(), y.to_integer()),
                    _ => return Err(WitnessError::NotAWitness),
                };
                let v = exact_div(&(2 * &yk), &(&xk - &x2k)).ok_or(WitnessError::NonIntegral)?;
                aux.push(v);
            }
        }
        _ => {}
    }
    Ok(ExtendedWitness { base: w.clone(), aux })
}

/// The reduced three-relation order-7 system (the denominators of the R-row
/// cleared into the B-row, plus the quartic the fourth coordinate satisfies).
/// Used as a cross-check of the four-relation form, never for classification.
pub mod alt7 {
    use super::*;

    /// Rows `(e1, e2, e3)`; a genuine order-7 configuration zeroes all three.
    pub fn residual(c: &Curve, z1: &BigInt, z2: &BigInt, z4: &BigInt) -> [BigInt; 3] {
        let m: BigInt = 2 * z1 + z2;
        let s = z1 + z2;
        let e1 = c.a() + (&s * &s - z1 * z2 + z4 * (z2 - z1));
        let u = &m + z4;
        let d = z1 - z2;
        let e2 = 4 * c.b() * &m
            - (&u * &u * &d * &d + 4 * z1 * &m * (z2 * &s + z4 * (z2 - z1)));
        let e3 = -z4.pow(4) + 2 * &m * z4.pow(3) + &m * &d * z4 * z4 - 2 * m.pow(3) * z4
            + 3 * (z1 * z1 + z1 * z2 + z2 * z2) * &m * &m;
        [e1, e2, e3]
    }
}

/// Rejected variant rows. Each differs from the verified row by a single
/// index or sign slip, looks plausible in isolation, and is refuted by
/// genuine torsion data; `docs/derivations.md` and the derivation-notes test
/// suite record the exact counterexamples. Kept callable so the regression
/// suite can pin the discrepancies; never used for classification.
pub mod variants {
    use super::*;

    /// Q-row of the order-7 final system with the second term prefactored by
    /// `z2` instead of `z1` (and the trailing index flipped). Zeroes on the
    /// historical near-solutions, fails on every genuine order-7 witness.
    pub fn q7_final_transcribed(z: &[BigInt]) -> BigInt {
        let d = &z[0] - &z[1];
        54 * (&z[2] * &z[2] * &d * &d
            + 4 * &z[1] * (&z[0] * &z[0] + &z[0] * &z[1] + &z[0] * &z[3] - &z[1] * &z[3]))
    }

    /// Residual of the order-7 final system with the transcribed Q-row in
    /// place of the verified one.
    pub fn residual_s7_transcribed(z: &[BigInt], c: &Curve) -> Result<SigmaResidual, SigmaError> {
        let id = SigmaId::final_of(SigmaTag::S7);
        check_arity(id, z)?;
        let rp = eval_p(id, z) - 36 * c.a();
        let rq = q7_final_transcribed(z) - 216 * c.b();
        let cons = eval_constraints(id, z);
        let mut it = cons.into_iter();
        Ok(SigmaResidual { rp, rq, rr: it.next(), rs: it.next(), rt: it.next() })
    }

    /// First constraint of the four-variable order-8 system in the form
    /// `z3^2 + z4^2 - 3 z1`. Unsolvable on genuine order-8 curves; the
    /// verified row is `z2^2 + z3^2 - 3 z1`.
    pub fn s8_prime_first_constraint_transcribed(z: &[BigInt]) -> BigInt {
        &z[2] * &z[2] + &z[3] * &z[3] - 3 * &z[0]
    }

    /// Order-5 bracket forms read at curve scale: `(bracket_A, bracket_B)`
    /// where genuine witnesses satisfy `bracket_A = 2A`, `bracket_B = 4B`.
    /// The historical near-solution `(2, 4, 6)` on `(-92, 480)` zeroes the
    /// curve-scale reading `bracket_A = A`, `bracket_B = B` instead.
    pub fn s5_brackets(z: &[BigInt]) -> (BigInt, BigInt) {
        let d = &z[0] - &z[1];
        let ba = &d * &d - 6 * &z[0] * &z[0] + &d * &z[2] * &z[2];
        let bb = (&z[0] + &z[1])
            * (6 * &z[0] * &z[0] - 2 * &z[0] * &z[1] + (&z[1] - &z[0]) * &z[2] * &z[2]);
        (ba, bb)
    }

    /// Middle row of the reduced order-7 system with the `z2`-prefactored
    /// slip carried through the denominator clearing.
    pub fn alt7_e2_transcribed(c: &Curve, z1: &BigInt, z2: &BigInt, z4: &BigInt) -> BigInt {
        let m: BigInt = 2 * z1 + z2;
        let u = &m + z4;
        let d = z1 - z2;
        4 * c.b() * &m
            - (&u * &u * &d * &d
                + 4 * z2 * &m * (z1 * z1 + z1 * z2 + z1 * z4 - z2 * z4))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::Curve;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn bigs(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&n| BigInt::from(n)).collect()
    }

    fn curve(a: i64, b: i64) -> Curve {
        Curve::new(a, b).unwrap()
    }

    #[test]
    fn golden_r5_on_92_480() {
        let c = curve(-92, 480);
        let r = residual(SigmaId::final_of(SigmaTag::S5), &bigs(&[2, 4, 6]), &c).unwrap();
        assert_eq!(r.rr, Some(big(4)));
        // the P/Q rows do not vanish at curve scale; the bracket forms do
        assert_eq!(r.rp, big(1656));
        assert_eq!(r.rq, big(-77760));
        let (ba, bb) = variants::s5_brackets(&bigs(&[2, 4, 6]));
        assert_eq!(ba, big(-92));
        assert_eq!(bb, big(480));
    }

    #[test]
    fn golden_s7_on_1_23() {
        let c = curve(1, 23);
        let z = bigs(&[1, 2, -2, -8]);
        // transcribed Q-row reproduces the historical tuple exactly
        let r = variants::residual_s7_transcribed(&z, &c).unwrap();
        assert_eq!(r.to_vec(), bigs(&[0, 0, 0, -443]));
        // verified Q-row differs by the documented -5184 in the Q-slot
        let r = residual(SigmaId::final_of(SigmaTag::S7), &z, &c).unwrap();
        assert_eq!(r.to_vec(), bigs(&[0, -5184, 0, -443]));
    }

    #[test]
    fn golden_r7_on_minus4_0() {
        let c = curve(-4, 0);
        let z = bigs(&[2, -2, 0, 0]);
        let r = residual(SigmaId::final_of(SigmaTag::S7), &z, &c).unwrap();
        assert_eq!(r.rp, big(0));
        assert_eq!(r.rq, big(0));
        assert_eq!(r.rr, Some(big(4)));
        assert_eq!(r.rs, Some(big(0)));
        // the z4 = 0 slot makes the transcribed and verified Q-rows agree here
        let rt = variants::residual_s7_transcribed(&z, &c).unwrap();
        assert_eq!(rt.to_vec(), r.to_vec());
    }

    #[test]
    fn residual_zero_witnesses() {
        let c = curve(-432, 8208);
        let r = residual(SigmaId::final_of(SigmaTag::S5), &bigs(&[-12, 24, -6]), &c).unwrap();
        assert!(r.is_zero());
        let c = curve(39, -23);
        let r = residual(SigmaId::final_of(SigmaTag::S3), &bigs(&[1, 2]), &c).unwrap();
        assert!(r.is_zero());
        let c = curve(-3483, 121014);
        let r = residual(SigmaId::final_of(SigmaTag::S7), &bigs(&[-45, 99, -6, -27]), &c).unwrap();
        assert!(r.is_zero(), "genuine order-7 witness must zero the verified system: {r}");
    }

    #[test]
    fn arity_mismatch() {
        let c = curve(-4, 0);
        let err = residual(SigmaId::final_of(SigmaTag::S5), &bigs(&[1, 2]), &c).unwrap_err();
        assert!(matches!(err, SigmaError::ArityMismatch { expected: 3, got: 2, .. }));
        assert!(SigmaId::prime_of(SigmaTag::S3).is_err());
    }

    #[test]
    fn points_from_witness_examples() {
        let (c, pts) = points_from_witness(SigmaId::final_of(SigmaTag::S3), &bigs(&[1, 2])).unwrap();
        assert_eq!((c.a().clone(), c.b().clone()), (big(39), big(-23)));
        assert_eq!(pts, vec![IntegerPoint::new(3, -11), IntegerPoint::new(3, 11)]);

        let (c, pts) = points_from_witness(SigmaId::final_of(SigmaTag::S4), &bigs(&[2, 2])).unwrap();
        assert_eq!((c.a().clone(), c.b().clone()), (big(4), big(0)));
        assert_eq!(pts, vec![IntegerPoint::new(2, -4), IntegerPoint::new(2, 4)]);

        let (c, pts) =
            points_from_witness(SigmaId::final_of(SigmaTag::S5), &bigs(&[-12, 24, -6])).unwrap();
        assert_eq!((c.a().clone(), c.b().clone()), (big(-432), big(8208)));
        // both x-coordinates recovered via the aux value t = (z1-z2)/z3
        assert_eq!(
            pts,
            vec![
                IntegerPoint::new(-12, -108),
                IntegerPoint::new(-12, 108),
                IntegerPoint::new(24, -108),
                IntegerPoint::new(24, 108),
            ]
        );
    }

    #[test]
    fn verify_witness_examples() {
        let c = curve(39, -23);
        assert!(verify_witness(SigmaId::final_of(SigmaTag::S3), &bigs(&[1, 2]), &c).unwrap());
        let c = curve(-92, 480);
        assert!(!verify_witness(SigmaId::final_of(SigmaTag::S5), &bigs(&[2, 4, 6]), &c).unwrap());
        let c = curve(-4, 0);
        // (z1, z2) = (0, -2): alpha = 2 is a root
        assert!(verify_witness(SigmaId::final_of(SigmaTag::S2One), &bigs(&[0, -2]), &c).unwrap());
    }

    #[test]
    fn extraction_round_trips() {
        let c = curve(-432, 8208);
        let p = IntegerPoint::new(-12, 108);
        let ws = extract_witness(&c, SigmaId::final_of(SigmaTag::S5), &p).unwrap();
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].z, bigs(&[-12, 24, -6]));
        let (_, pts) = points_from_witness(ws[0].id, &ws[0].z).unwrap();
        assert!(pts.contains(&p));

        let c = curve(4, 0);
        let p = IntegerPoint::new(2, 4);
        let ws = extract_witness(&c, SigmaId::final_of(SigmaTag::S4), &p).unwrap();
        let zs: Vec<Vec<BigInt>> = ws.iter().map(|w| w.z.clone()).collect();
        assert!(zs.contains(&bigs(&[2, 2])));
        assert!(zs.contains(&bigs(&[2, -2])));

        let c = curve(39, -23);
        let p = IntegerPoint::new(3, 11);
        let ws = extract_witness(&c, SigmaId::final_of(SigmaTag::S3), &p).unwrap();
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].z, bigs(&[1, 2]));
    }

    #[test]
    fn extraction_order7() {
        let c = curve(-3483, 121014);
        let p = IntegerPoint::new(-45, 432);
        let ws = extract_witness(&c, SigmaId::final_of(SigmaTag::S7), &p).unwrap();
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].z, bigs(&[-45, 99, -6, -27]));
        assert!(verify_witness(ws[0].id, &ws[0].z, &c).unwrap());
        // pre-elimination form carries x3 = x([3]P) = 27 explicitly
        let wp = extract_witness(&c, SigmaId::prime_of(SigmaTag::S7).unwrap(), &p).unwrap();
        assert_eq!(wp[0].z, bigs(&[-45, 99, 27, -27, -6]));
        assert!(verify_witness(wp[0].id, &wp[0].z, &c).unwrap());
    }

    #[test]
    fn extraction_order8() {
        let c = curve(-5211, 319734);
        let p = IntegerPoint::new(195, 2592);
        let ws = extract_witness(&c, SigmaId::prime_of(SigmaTag::S8).unwrap(), &p).unwrap();
        assert!(!ws.is_empty());
        for w in &ws {
            assert!(verify_witness(w.id, &w.z, &c).unwrap());
            // order-8 corollary: 3 * x([2]P) is the sum of two squares z2^2 + z3^2
            assert_eq!(&w.z[1] * &w.z[1] + &w.z[2] * &w.z[2], 3 * &w.z[0]);
        }
    }

    #[test]
    fn extraction_order9() {
        let c = curve(-17739, 1205766);
        let p = IntegerPoint::new(-117, 1296);
        let ws = extract_witness(&c, SigmaId::final_of(SigmaTag::S9), &p).unwrap();
        assert!(!ws.is_empty());
        for w in &ws {
            assert!(verify_witness(w.id, &w.z, &c).unwrap());
        }
    }

    #[test]
    fn extended_witness_aux() {
        let c = curve(-432, 8208);
        let w = SigmaWitness::new(SigmaId::final_of(SigmaTag::S5), bigs(&[-12, 24, -6]));
        let e = extend_witness(&c, &w).unwrap();
        assert_eq!(e.aux, bigs(&[6]));
        // defining relation t^2 = 6(z1+z2) - z3^2
        assert_eq!(&e.aux[0] * &e.aux[0], big(6 * 12 - 36));

        let c = curve(-3483, 121014);
        let w = SigmaWitness::new(SigmaId::final_of(SigmaTag::S7), bigs(&[-45, 99, 6, -27]));
        let e = extend_witness(&c, &w).unwrap();
        assert_eq!(e.aux.len(), 2);
        // s and t are the x5-values of the witnesses based at [2]P and [3]P
        for v in &e.aux {
            assert!(!v.is_zero());
        }
    }

    #[test]
    fn canonical_picks_smallest() {
        let w = SigmaWitness::new(SigmaId::final_of(SigmaTag::S5), bigs(&[-12, 24, 6]));
        assert_eq!(w.canonical().z, bigs(&[-12, 24, -6]));
        let w = SigmaWitness::new(SigmaId::final_of(SigmaTag::S3), bigs(&[1, 2]));
        assert_eq!(w.canonical().z, bigs(&[-1, -2]));
    }

    #[test]
    fn alt7_cross_check() {
        let c = curve(-3483, 121014);
        let r = alt7::residual(&c, &big(-45), &big(99), &big(-27));
        assert_eq!(r, [big(0), big(0), big(0)]);
        // transcribed middle row does not vanish there
        assert_ne!(variants::alt7_e2_transcribed(&c, &big(-45), &big(99), &big(-27)), big(0));
    }
}

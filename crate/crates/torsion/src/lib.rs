//! Exact computation of the rational torsion subgroup of an elliptic curve
//! `Y^2 = X^3 + A X + B` with integer coefficients.
//!
//! Two independent routes are implemented and cross-checked against each other:
//!
//! * a Nagell–Lutz oracle ([`group::torsion_oracle`]) that enumerates integer
//!   candidate points and measures their orders with the exact group law, and
//! * a family of diophantine order systems ([`sigma`]) whose integral
//!   solvability is equivalent to the existence of a rational point of order
//!   `n` for `n ∈ {2, 3, 4, 5, 7, 8, 9}`, joined into the full group shape by
//!   [`classify`].
//!
//! All arithmetic is exact: curve coefficients and witness coordinates are
//! arbitrary-precision integers, affine points are exact rationals. There is
//! no floating point anywhere in this crate.

pub mod arith;
pub mod classify;
pub mod curve;
pub mod divpoly;
pub mod family;
pub mod group;
pub mod record;
pub mod sigma;
pub mod solver;

pub use classify::{classify, cross_check, torsion_flags, ClassifyError, CrossCheckReport, TorsionFlags};
pub use curve::{Curve, CurveError, IntegerPoint, Point};
pub use family::{curve_with_order3, curve_with_order4, FamilyError};
pub use group::{point_order, torsion_oracle, PointOrder, TorsionGroup, TorsionShape};
pub use record::CurveRecord;
pub use sigma::{SigmaId, SigmaResidual, SigmaTag, SigmaVariant, SigmaWitness};

//! Joins the per-order existence flags into the exact group shape and
//! cross-checks the result against the Nagell-Lutz oracle.

use crate::curve::Curve;
use crate::group::{torsion_oracle, TorsionGroup, TorsionShape};
use crate::sigma::{extract_witness, SigmaWitness};
use crate::solver::{classification_id, has_order_n_point, order2_count};
use std::time::{Duration, Instant};
use thiserror::Error;

/// Existence flags for prime and prime-power orders; only these have to be
/// solved directly, composite orders follow by joining.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorsionFlags {
    /// number of order-two points: 0, 1 or 3
    pub e2: u8,
    pub b3: bool,
    pub b4: bool,
    pub b5: bool,
    pub b7: bool,
    pub b8: bool,
    pub b9: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("existence flags match no Mazur shape: {0:?}")]
    InconsistentFlags(TorsionFlags),
}

/// Solves the order systems for `n ∈ {2, 3, 4, 5, 7, 8, 9}`.
pub fn torsion_flags(c: &Curve) -> TorsionFlags {
    TorsionFlags {
        e2: order2_count(c) as u8,
        b3: has_order_n_point(c, 3),
        b4: has_order_n_point(c, 4),
        b5: has_order_n_point(c, 5),
        b7: has_order_n_point(c, 7),
        b8: has_order_n_point(c, 8),
        b9: has_order_n_point(c, 9),
    }
}

/// The unique Mazur shape consistent with the flags. `InconsistentFlags` is
/// a hard diagnostic: it is exactly where a solver defect (or a defective
/// system row) would surface, so it is never coerced.
pub fn shape_from_flags(flags: TorsionFlags) -> Result<TorsionShape, ClassifyError> {
    let TorsionFlags { e2, b3, b4, b5, b7, b8, b9 } = flags;
    // subgroup closure sanity: order 8 needs order 4, order 9 needs order 3
    if (b8 && !b4) || (b9 && !b3) || (b4 && e2 == 0) {
        return Err(ClassifyError::InconsistentFlags(flags));
    }
    let shape = match (e2, b3, b4, b5, b7, b8, b9) {
        (0, false, false, false, false, false, false) => TorsionShape::Cyclic(1),
        (0, true, false, false, false, false, false) => TorsionShape::Cyclic(3),
        (0, false, false, true, false, false, false) => TorsionShape::Cyclic(5),
        (0, false, false, false, true, false, false) => TorsionShape::Cyclic(7),
        (0, true, false, false, false, false, true) => TorsionShape::Cyclic(9),
        (1, false, false, false, false, false, false) => TorsionShape::Cyclic(2),
        (1, false, true, false, false, false, false) => TorsionShape::Cyclic(4),
        (1, false, true, false, false, true, false) => TorsionShape::Cyclic(8),
        (1, true, false, false, false, false, false) => TorsionShape::Cyclic(6),
        (1, false, false, true, false, false, false) => TorsionShape::Cyclic(10),
        (1, true, true, false, false, false, false) => TorsionShape::Cyclic(12),
        (3, false, false, false, false, false, false) => TorsionShape::TwoByTwoN(1),
        (3, false, true, false, false, false, false) => TorsionShape::TwoByTwoN(2),
        (3, true, false, false, false, false, false) => TorsionShape::TwoByTwoN(3),
        (3, false, true, false, false, true, false) => TorsionShape::TwoByTwoN(4),
        _ => return Err(ClassifyError::InconsistentFlags(flags)),
    };
    Ok(shape)
}

/// Torsion shape determined purely by the order systems.
pub fn classify(c: &Curve) -> Result<TorsionShape, ClassifyError> {
    shape_from_flags(torsion_flags(c))
}

/// Structured comparison of the system-based classification against the
/// group-law oracle. Mismatches are report entries, never panics.
#[derive(Debug, Clone)]
pub struct CrossCheckReport {
    pub curve: Curve,
    pub sigma_shape: Result<TorsionShape, ClassifyError>,
    pub oracle: TorsionGroup,
    /// for every oracle point of system-covered order, whether witness
    /// extraction succeeded: (order, point count, witnesses found)
    pub witness_coverage: Vec<(u32, usize, usize)>,
    pub sigma_time: Duration,
    pub oracle_time: Duration,
}

impl CrossCheckReport {
    pub fn matched(&self) -> bool {
        matches!(&self.sigma_shape, Ok(s) if *s == self.oracle.shape)
            && self.witness_coverage.iter().all(|(_, pts, ws)| *pts == 0 || *ws > 0)
    }
}

pub fn cross_check(c: &Curve) -> CrossCheckReport {
    let t0 = Instant::now();
    let sigma_shape = classify(c);
    let sigma_time = t0.elapsed();
    let t1 = Instant::now();
    let oracle = torsion_oracle(c);
    let oracle_time = t1.elapsed();
    let mut witness_coverage = Vec::new();
    for n in [2u32, 3, 4, 5, 7, 8, 9] {
        let pts = oracle.points_of_order(c, n);
        if pts.is_empty() {
            witness_coverage.push((n, 0, 0));
            continue;
        }
        let id = classification_id(n);
        let mut ws: Vec<SigmaWitness> = Vec::new();
        for p in &pts {
            if let Ok(mut found) = extract_witness(c, id, p) {
                ws.append(&mut found);
            }
        }
        ws.sort();
        ws.dedup();
        witness_coverage.push((n, pts.len(), ws.len()));
    }
    CrossCheckReport { curve: c.clone(), sigma_shape, oracle, witness_coverage, sigma_time, oracle_time }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(a: i64, b: i64) -> Curve {
        Curve::new(a, b).unwrap()
    }

    #[test]
    fn flags_examples() {
        let f = torsion_flags(&curve(-4, 0));
        assert_eq!(f, TorsionFlags { e2: 3, b3: false, b4: false, b5: false, b7: false, b8: false, b9: false });
        let f = torsion_flags(&curve(0, 1));
        assert_eq!(f.e2, 1);
        assert!(f.b3);
        assert!(!f.b4 && !f.b5 && !f.b7 && !f.b8 && !f.b9);
        let f = torsion_flags(&curve(1, 23));
        assert_eq!(f.e2, 0);
        assert!(!f.b3 && !f.b4 && !f.b5 && !f.b7 && !f.b8 && !f.b9);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&curve(-4, 0)).unwrap(), TorsionShape::TwoByTwoN(1));
        assert_eq!(classify(&curve(-432, 8208)).unwrap(), TorsionShape::Cyclic(5));
        assert_eq!(classify(&curve(-92, 480)).unwrap(), TorsionShape::Cyclic(1));
        assert_eq!(classify(&curve(0, 1)).unwrap(), TorsionShape::Cyclic(6));
        assert_eq!(classify(&curve(-1947, 108214)).unwrap(), TorsionShape::Cyclic(12));
        assert_eq!(classify(&curve(-24003, 1296702)).unwrap(), TorsionShape::TwoByTwoN(3));
    }

    #[test]
    fn inconsistent_flags_rejected() {
        let f = TorsionFlags { e2: 0, b3: true, b4: false, b5: true, b7: false, b8: false, b9: false };
        assert!(shape_from_flags(f).is_err());
        let f = TorsionFlags { e2: 1, b3: false, b4: false, b5: false, b7: false, b8: true, b9: false };
        assert!(shape_from_flags(f).is_err());
        let f = TorsionFlags { e2: 3, b3: true, b4: true, b5: false, b7: false, b8: false, b9: false };
        assert!(shape_from_flags(f).is_err());
    }

    #[test]
    fn cross_check_examples() {
        for (a, b) in [(-4i64, 0i64), (0, 1), (1, 23)] {
            let r = cross_check(&curve(a, b));
            assert!(r.matched(), "mismatch on ({a}, {b}): {:?}", r.sigma_shape);
        }
    }
}

//! Coefficientwise comparison of matching vectors.
//!
//! `G1 ⪯ G2` when `b_k(G1) <= b_k(G2)` for every `k`. Strict domination forces
//! strictly smaller energy; equal vectors force equal energy. Different graphs
//! can share a vector, so this is a quasi-order and never looks at structure.

use std::cmp::Ordering;

use serde::Serialize;

use crate::charpoly::{coeffs, CoeffVector};
use crate::error::{Error, Result};
use crate::graph::WeightedForest;
use crate::spectrum::energy_eigen;

/// Margin by which a strictly dominated graph's energy must fall short.
pub const STRICT_MARGIN: f64 = 1e-12;
/// Energy agreement required between graphs with identical vectors.
pub const EQUAL_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "relation")]
pub enum OrderRelation {
    /// `C1 ≺ C2`; `witness` is the first index with `b_k(C1) < b_k(C2)`.
    StrictlyLess {
        witness: usize,
    },
    Equivalent,
    /// `C1 ≻ C2`; `witness` is the first index with `b_k(C1) > b_k(C2)`.
    StrictlyGreater {
        witness: usize,
    },
    /// First indices where `C1` is below and above `C2` respectively.
    Incomparable {
        less_at: usize,
        greater_at: usize,
    },
}

impl OrderRelation {
    pub fn name(&self) -> &'static str {
        match self {
            OrderRelation::StrictlyLess { .. } => "StrictlyLess",
            OrderRelation::Equivalent => "Equivalent",
            OrderRelation::StrictlyGreater { .. } => "StrictlyGreater",
            OrderRelation::Incomparable { .. } => "Incomparable",
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            OrderRelation::StrictlyLess { witness } => OrderRelation::StrictlyGreater { witness },
            OrderRelation::StrictlyGreater { witness } => OrderRelation::StrictlyLess { witness },
            OrderRelation::Incomparable { less_at, greater_at } => OrderRelation::Incomparable {
                less_at: greater_at,
                greater_at: less_at,
            },
            OrderRelation::Equivalent => OrderRelation::Equivalent,
        }
    }

    pub fn is_strictly_less(&self) -> bool {
        matches!(self, OrderRelation::StrictlyLess { .. })
    }

    pub fn is_strictly_greater(&self) -> bool {
        matches!(self, OrderRelation::StrictlyGreater { .. })
    }
}

pub fn compare(c1: &CoeffVector, c2: &CoeffVector) -> Result<OrderRelation> {
    if c1.order() != c2.order() {
        return Err(Error::OrderMismatch(c1.order(), c2.order()));
    }
    let mut less_at = None;
    let mut greater_at = None;
    for (k, (x, y)) in c1.as_slice().iter().zip(c2.as_slice()).enumerate() {
        match x.cmp(y) {
            Ordering::Less if less_at.is_none() => less_at = Some(k),
            Ordering::Greater if greater_at.is_none() => greater_at = Some(k),
            _ => {}
        }
    }
    Ok(match (less_at, greater_at) {
        (None, None) => OrderRelation::Equivalent,
        (Some(witness), None) => OrderRelation::StrictlyLess { witness },
        (None, Some(witness)) => OrderRelation::StrictlyGreater { witness },
        (Some(less_at), Some(greater_at)) => OrderRelation::Incomparable { less_at, greater_at },
    })
}

/// Outcome of checking that energies respect the quasi-order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotoneCheck {
    pub relation: OrderRelation,
    pub energy1: f64,
    pub energy2: f64,
    /// False only for incomparable pairs, about which nothing is claimed.
    pub constrained: bool,
}

/// Compares two forests and checks their eigenvalue energies are ordered the
/// same way. A violation is returned as an error: it can only mean a bug.
pub fn assert_monotone(g1: &WeightedForest, g2: &WeightedForest) -> Result<MonotoneCheck> {
    let relation = compare(&coeffs(g1), &coeffs(g2))?;
    let (e1, e2) = (energy_eigen(g1)?, energy_eigen(g2)?);
    check_energies(relation, e1, e2)
}

pub(crate) fn check_energies(relation: OrderRelation, e1: f64, e2: f64) -> Result<MonotoneCheck> {
    let ok = match relation {
        OrderRelation::StrictlyLess { .. } => e1 < e2 - STRICT_MARGIN,
        OrderRelation::StrictlyGreater { .. } => e2 < e1 - STRICT_MARGIN,
        OrderRelation::Equivalent => (e1 - e2).abs() <= EQUAL_TOLERANCE,
        OrderRelation::Incomparable { .. } => true,
    };
    if !ok {
        return Err(Error::MonotonicityViolation(format!(
            "{} but energies are {e1} and {e2}",
            relation.name()
        )));
    }
    Ok(MonotoneCheck {
        relation,
        energy1: e1,
        energy2: e2,
        constrained: !matches!(relation, OrderRelation::Incomparable { .. }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cv(n: usize, b: &[u64]) -> CoeffVector {
        CoeffVector::from_u64(n, b).unwrap()
    }

    fn f(n: usize, e: &[(usize, usize, u64)]) -> WeightedForest {
        WeightedForest::new(n, e).unwrap()
    }

    #[test]
    fn star_below_path() {
        assert_eq!(
            compare(&cv(4, &[1, 3, 0]), &cv(4, &[1, 3, 1])).unwrap(),
            OrderRelation::StrictlyLess { witness: 2 }
        );
    }

    #[test]
    fn identical_vectors() {
        assert_eq!(
            compare(&cv(4, &[1, 3, 1]), &cv(4, &[1, 3, 1])).unwrap(),
            OrderRelation::Equivalent
        );
    }

    #[test]
    fn incomparable_pair() {
        // weighted K_{1,2} with weights (2,1) plus K_1, against unit P_4
        let a = f(4, &[(0, 1, 2), (0, 2, 1)]);
        let c = coeffs(&a);
        assert_eq!(c, cv(4, &[1, 5, 0]));
        assert_eq!(
            compare(&c, &cv(4, &[1, 3, 1])).unwrap(),
            OrderRelation::Incomparable {
                less_at: 2,
                greater_at: 1
            }
        );
    }

    #[test]
    fn different_orders_rejected() {
        assert_eq!(
            compare(&cv(4, &[1, 3]), &cv(5, &[1, 3])),
            Err(Error::OrderMismatch(4, 5))
        );
    }

    #[test]
    fn monotone_examples() {
        let star = f(4, &[(0, 1, 1), (0, 2, 1), (0, 3, 1)]);
        let path = f(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1)]);
        let r = assert_monotone(&star, &path).unwrap();
        assert!(r.relation.is_strictly_less());
        assert!((r.energy1 - 2.0 * 3f64.sqrt()).abs() < 1e-12);
        assert!((r.energy2 - 2.0 * 5f64.sqrt()).abs() < 1e-12);
        assert_eq!(
            assert_monotone(&path, &path).unwrap().relation,
            OrderRelation::Equivalent
        );

        let p2p4 = f(6, &[(0, 1, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1)]);
        let p3p3 = f(6, &[(0, 1, 1), (1, 2, 1), (3, 4, 1), (4, 5, 1)]);
        let r = assert_monotone(&p3p3, &p2p4).unwrap();
        assert!(r.relation.is_strictly_less());
        assert!(r.energy1 < r.energy2);
    }

    #[test]
    fn violation_is_an_error() {
        let bad = check_energies(OrderRelation::StrictlyLess { witness: 1 }, 3.0, 2.0);
        assert!(matches!(bad, Err(Error::MonotonicityViolation(_))));
    }
}

mod common;

use common::*;
use multitree::extremal::{lookup, search, verify, Direction, Params, REGISTRY};
use multitree::{assert_monotone, coeffs, compare, enumerate_class, ClassSpec, Error, OrderRelation};

const BUDGET: u128 = 10_000_000;

#[test]
fn monotonicity_over_small_tree_classes() {
    let mut constrained = 0;
    for n in 2..=6usize {
        for m in (n as u64 - 1)..=8 {
            let members = enumerate_class(&ClassSpec::MultiTree { n, m }, BUDGET).unwrap();
            for a in &members {
                for b in &members {
                    let check = assert_monotone(&a.forest, &b.forest)
                        .unwrap_or_else(|e| panic!("{} vs {}: {e}", a.code, b.code));
                    constrained += usize::from(check.constrained);
                }
            }
        }
    }
    assert!(constrained > 0);
}

#[test]
fn relation_is_transitive_and_antisymmetric() {
    let members = enumerate_class(&ClassSpec::MultiTree { n: 5, m: 6 }, BUDGET).unwrap();
    let c: Vec<_> = members.iter().map(|m| coeffs(&m.forest)).collect();
    let rel = |i: usize, j: usize| compare(&c[i], &c[j]).unwrap();
    let leq = |r: OrderRelation| matches!(r, OrderRelation::StrictlyLess { .. } | OrderRelation::Equivalent);
    for i in 0..c.len() {
        assert_eq!(rel(i, i), OrderRelation::Equivalent);
        for j in 0..c.len() {
            assert_eq!(rel(i, j), rel(j, i).reversed());
            for k in 0..c.len() {
                if leq(rel(i, j)) && leq(rel(j, k)) {
                    assert!(leq(rel(i, k)), "{i} {j} {k}");
                    if rel(i, j).is_strictly_less() || rel(j, k).is_strictly_less() {
                        assert!(rel(i, k).is_strictly_less());
                    }
                }
            }
        }
    }
}

#[test]
fn witnesses_point_at_a_differing_coefficient() {
    let members = enumerate_class(&ClassSpec::MultiTree { n: 6, m: 7 }, BUDGET).unwrap();
    for a in &members {
        for b in &members {
            let (ca, cb) = (coeffs(&a.forest), coeffs(&b.forest));
            match compare(&ca, &cb).unwrap() {
                OrderRelation::StrictlyLess { witness } => assert!(ca.get(witness) < cb.get(witness)),
                OrderRelation::StrictlyGreater { witness } => assert!(ca.get(witness) > cb.get(witness)),
                OrderRelation::Incomparable { less_at, greater_at } => {
                    assert!(ca.get(less_at) < cb.get(less_at));
                    assert!(ca.get(greater_at) > cb.get(greater_at));
                }
                OrderRelation::Equivalent => assert_eq!(ca, cb),
            }
        }
    }
}

#[test]
fn different_orders_are_not_compared() {
    let err = compare(&coeffs(&path(&[1, 1])), &coeffs(&path(&[1, 1, 1]))).unwrap_err();
    assert_eq!(err, Error::OrderMismatch(3, 4));
}

#[test]
fn search_agrees_with_a_plain_scan() {
    for spec in [
        ClassSpec::MultiTree { n: 6, m: 8 },
        ClassSpec::MultiForest { n: 5, m: 4 },
        ClassSpec::UnitForest { n: 7, k: 2 },
    ] {
        let energies: Vec<f64> = enumerate_class(&spec, BUDGET)
            .unwrap()
            .iter()
            .map(|m| multitree::energy_eigen(&m.forest).unwrap())
            .collect();
        let lo = energies.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = energies.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        assert!((search(&spec, Direction::Min, BUDGET).unwrap().value - lo).abs() < 1e-12);
        assert!((search(&spec, Direction::Max, BUDGET).unwrap().value - hi).abs() < 1e-12);
    }
}

#[test]
fn incomparable_near_ties_are_not_guessed() {
    // Weighted P_4s (a,1,c) with a+c=5 have different vectors and equal float
    // energies, and their squared spectra are not integral.
    let err = search(&ClassSpec::MultiTree { n: 4, m: 6 }, Direction::Max, BUDGET).unwrap_err();
    assert!(matches!(err, Error::UnresolvedTie(..)), "{err}");
}

#[test]
fn every_registered_statement_passes_at_sample_parameters() {
    for entry in REGISTRY {
        let params = match entry.id {
            "lem3.2" | "thm3.3" => Params::nm(5, 8),
            "thm3.6" | "cor3.7" => Params::nm(5, 8),
            "ex3.4" => Params::only_m(7),
            "lem4.2" => Params::nm(4, 8),
            "lem4.4" => Params::only_n(8),
            "thm4.3" => Params::nk(7, 3),
            "thm4.5" => Params::nk(7, 4),
            "thm4.6" => Params::nk(7, 3),
            "thm3.1" => Params::nm(5, 6),
            "thm2.4" => Params::nm(6, 3),
            _ => Params::nm(5, 7),
        };
        let result = verify(entry.id, &params, BUDGET).unwrap();
        assert!(result.pass, "{}: {:?}", entry.id, result.discrepancy);
        assert!(lookup(&entry.id.to_uppercase()).is_ok());
        for alias in entry.aliases {
            assert_eq!(lookup(alias).unwrap().id, entry.id);
        }
    }
    assert!(matches!(
        verify("thm9.9", &Params::nm(5, 7), BUDGET),
        Err(Error::UnknownTheorem(_))
    ));
}

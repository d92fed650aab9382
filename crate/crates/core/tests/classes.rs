mod common;

use std::collections::BTreeSet;

use common::*;
use multitree::enumerate::{compositions, count_compositions, estimate_class_size, unlabeled_trees};
use multitree::{canonical_code, enumerate_class, CanonicalCode, ClassSpec, Error, WeightedForest};

const BUDGET: u128 = 10_000_000;

fn codes(spec: ClassSpec) -> BTreeSet<CanonicalCode> {
    enumerate_class(&spec, BUDGET)
        .unwrap()
        .into_iter()
        .map(|m| m.code)
        .collect()
}

/// Every labelled forest on `n` vertices, as edge lists, by acyclic edge subsets.
fn labelled_forests(n: usize) -> Vec<Vec<(usize, usize)>> {
    let all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << all.len()) {
        let edges: Vec<_> = (0..all.len()).filter(|i| mask >> i & 1 == 1).map(|i| all[i]).collect();
        let unit: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1)).collect();
        if WeightedForest::new(n, &unit).is_ok() {
            out.push(edges);
        }
    }
    out
}

#[test]
fn tree_counts_match_prufer() {
    // Unlabelled tree counts from collapsing all n^(n-2) labelled trees.
    for n in 2..=7 {
        let from_prufer: BTreeSet<_> = labelled_trees(n)
            .into_iter()
            .map(|t| canonical_code(&forest(n, &t.iter().map(|&(u, v)| (u, v, 1)).collect::<Vec<_>>())))
            .collect();
        assert_eq!(unlabeled_trees(n).unwrap().len(), from_prufer.len(), "n={n}");
    }
}

#[test]
fn tree_classes_match_prufer() {
    for n in 1..=5usize {
        for m in (n as u64 - 1)..=7 {
            let spec = ClassSpec::MultiTree { n, m };
            if spec.validate().is_err() {
                continue;
            }
            assert_eq!(codes(spec), tree_class_codes_by_prufer(n, m), "T({n},{m})");
        }
    }
}

#[test]
fn forest_classes_match_edge_subsets() {
    for n in 1..=5usize {
        for m in 0..=6u64 {
            let mut expected = BTreeSet::new();
            for edges in labelled_forests(n) {
                if edges.is_empty() {
                    if m == 0 {
                        expected.insert(canonical_code(&WeightedForest::empty(n)));
                    }
                    continue;
                }
                for w in weight_vectors(m, edges.len()) {
                    let e: Vec<_> = edges.iter().zip(&w).map(|(&(u, v), &w)| (u, v, w)).collect();
                    expected.insert(canonical_code(&forest(n, &e)));
                }
            }
            assert_eq!(codes(ClassSpec::MultiForest { n, m }), expected, "F({n},{m})");
        }
    }
}

#[test]
fn class_inclusions() {
    for n in 2..=6usize {
        for m in (n as u64 - 1)..=8 {
            let t = codes(ClassSpec::MultiTree { n, m });
            let f = codes(ClassSpec::MultiForest { n, m });
            assert!(t.is_subset(&f), "T({n},{m}) within F({n},{m})");
            if m >= n as u64 {
                let fixed = codes(ClassSpec::FixedSeqTree { n, m });
                assert!(fixed.is_subset(&t));
            }
        }
        for k in 1..=n {
            // Unit-weight members of F(n, n-k) are exactly F_n^k.
            let unit: BTreeSet<_> = enumerate_class(&ClassSpec::MultiForest { n, m: (n - k) as u64 }, BUDGET)
                .unwrap()
                .into_iter()
                .filter(|m| m.forest.edges().iter().all(|e| e.w == 1))
                .map(|m| m.code)
                .collect();
            assert_eq!(unit, codes(ClassSpec::UnitForest { n, k }), "F_{n}^{k}");
        }
    }
}

#[test]
fn members_are_valid_sorted_and_distinct() {
    for spec in [
        ClassSpec::MultiTree { n: 6, m: 8 },
        ClassSpec::MultiForest { n: 5, m: 5 },
        ClassSpec::FixedSeqTree { n: 6, m: 9 },
        ClassSpec::UnitForest { n: 8, k: 3 },
    ] {
        let members = enumerate_class(&spec, BUDGET).unwrap();
        assert!(members.windows(2).all(|w| w[0].code < w[1].code), "{spec}");
        for m in &members {
            assert!(spec.contains(&m.forest), "{spec}: {}", m.code);
            assert_eq!(canonical_code(&m.forest), m.code);
        }
        assert!(estimate_class_size(&spec).unwrap() >= members.len() as u128);
    }
}

#[test]
fn compositions_are_complete() {
    for total in 0..=8u64 {
        for parts in 1..=4usize {
            let listed: Vec<_> = match compositions(total, parts) {
                Ok(it) => it.collect(),
                Err(Error::Infeasible { .. }) => Vec::new(),
                Err(e) => panic!("{e}"),
            };
            assert_eq!(listed, weight_vectors(total, parts));
            assert_eq!(count_compositions(total, parts), listed.len() as u128);
        }
    }
}

#[test]
fn budget_is_enforced_before_work() {
    let err = enumerate_class(&ClassSpec::MultiTree { n: 12, m: 40 }, BUDGET).unwrap_err();
    assert!(matches!(err, Error::BudgetExceeded { .. }), "{err}");
    assert!(matches!(
        enumerate_class(&ClassSpec::MultiTree { n: 5, m: 7 }, 3),
        Err(Error::BudgetExceeded { budget: 3, .. })
    ));
}

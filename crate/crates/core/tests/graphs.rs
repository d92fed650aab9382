mod common;

use common::*;
use multitree::graph::GraphJson;
use multitree::{canonical_code, Error, WeightedForest};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

#[test]
fn canonical_code_agrees_with_brute_force_isomorphism() {
    let mut rng = StdRng::seed_from_u64(11);
    let sample: Vec<WeightedForest> = (0..60).map(|_| random_forest(&mut rng, 6, 2, 0.8)).collect();
    for (i, g) in sample.iter().enumerate() {
        for h in &sample[i..] {
            assert_eq!(
                canonical_code(g) == canonical_code(h),
                isomorphic_brute(g, h),
                "{g} vs {h}"
            );
        }
    }
}

#[test]
fn every_labelled_tree_on_six_vertices_gets_its_class_code() {
    // 1296 labelled trees collapse onto the 6 unlabelled ones.
    let codes: std::collections::BTreeSet<_> = labelled_trees(6)
        .into_iter()
        .map(|t| {
            let edges: Vec<_> = t.into_iter().map(|(u, v)| (u, v, 1)).collect();
            canonical_code(&forest(6, &edges))
        })
        .collect();
    assert_eq!(codes.len(), 6);
}

#[test]
fn json_round_trip_and_rejections() {
    let g = forest(5, &[(0, 1, 3), (1, 2, 1), (3, 4, 2)]);
    let back = WeightedForest::from_json_str(&serde_json::to_string(&g.to_json()).unwrap()).unwrap();
    assert_eq!(canonical_code(&back), canonical_code(&g));

    let bad = |s: &str| WeightedForest::from_json_str(s).unwrap_err();
    assert!(matches!(
        bad(r#"{"n":3,"edges":[[0,1,1],[1,2,1],[2,0,1]]}"#),
        Error::Cycle { .. }
    ));
    assert!(matches!(
        bad(r#"{"n":2,"edges":[[0,1,0]]}"#),
        Error::NonPositiveWeight { .. }
    ));
    assert!(matches!(
        bad(r#"{"n":2,"edges":[[0,1,-4]]}"#),
        Error::NonPositiveWeight { .. }
    ));
    assert!(matches!(
        bad(r#"{"n":2,"edges":[[0,2,1]]}"#),
        Error::VertexOutOfRange { .. }
    ));
    assert!(matches!(
        bad(r#"{"n":2,"edges":[[0,1,1],[1,0,2]]}"#),
        Error::DuplicateEdge { .. }
    ));
    assert!(matches!(bad(r#"{"n":2,"edges":[[1,1,1]]}"#), Error::SelfLoop(1)));
    assert!(matches!(bad(r#"{"n":2,"edges":[[0,1]]}"#), Error::Json(_)));
    assert!(serde_json::from_str::<GraphJson>(r#"{"n":2,"edges":[],"extra":1}"#).is_err());
}

fn arb_forest() -> impl Strategy<Value = (WeightedForest, Vec<usize>)> {
    (1usize..=9).prop_flat_map(|n| {
        let parents = proptest::collection::vec((any::<prop::sample::Index>(), 0u64..=4), n.saturating_sub(1));
        let perm = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
        (Just(n), parents, perm).prop_map(|(n, parents, perm)| {
            // Weight 0 in the draw means "no edge", so forests as well as trees appear.
            let edges: Vec<_> = parents
                .iter()
                .enumerate()
                .filter(|(_, (_, w))| *w > 0)
                .map(|(i, (p, w))| (p.index(i + 1), i + 1, *w))
                .collect();
            (WeightedForest::new(n, &edges).unwrap(), perm)
        })
    })
}

proptest! {
    #[test]
    fn canonical_code_is_relabelling_invariant((g, perm) in arb_forest()) {
        let h = g.permuted(&perm).unwrap();
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
    }

    #[test]
    fn canonical_code_is_csv_safe((g, _) in arb_forest()) {
        let code = canonical_code(&g);
        prop_assert!(code.as_str().bytes().all(|b| b.is_ascii_graphic() && b != b','));
    }
}

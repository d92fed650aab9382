//! Canonical codes for weighted forests.
//!
//! Each component is rooted at its center (trying both ends of a bicentral
//! tree) and encoded bottom-up: a vertex is `(` followed by its sorted child
//! items `w(...)` and `)`, where `w` is the weight of the edge to that child.
//! Component codes are sorted and joined with `+`.

use std::fmt;

use serde::{Serialize, Serializer};

use super::forest::WeightedForest;

/// Identifies a weighted forest up to weight-preserving isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        // only ASCII digits, parentheses and '+' are ever written
        std::str::from_utf8(&self.0).expect("canonical codes are ASCII")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

pub fn canonical_code(forest: &WeightedForest) -> CanonicalCode {
    let adj = forest.adjacency();
    let mut codes: Vec<String> = forest
        .components()
        .iter()
        .map(|comp| {
            centers(&adj, comp)
                .into_iter()
                .map(|c| encode(&adj, c, usize::MAX))
                .min()
                .expect("a component has at least one center")
        })
        .collect();
    codes.sort();
    CanonicalCode(codes.join("+").into_bytes())
}

fn encode(adj: &[Vec<(usize, u64)>], v: usize, parent: usize) -> String {
    let mut items: Vec<String> = adj[v]
        .iter()
        .filter(|&&(c, _)| c != parent)
        .map(|&(c, w)| format!("{w}{}", encode(adj, c, v)))
        .collect();
    items.sort();
    let mut out = String::with_capacity(2 + items.iter().map(String::len).sum::<usize>());
    out.push('(');
    for it in items {
        out.push_str(&it);
    }
    out.push(')');
    out
}

/// One or two central vertices of the tree spanned by `comp`, found by
/// repeatedly stripping leaves.
fn centers(adj: &[Vec<(usize, u64)>], comp: &[usize]) -> Vec<usize> {
    if comp.len() <= 2 {
        return comp.to_vec();
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = comp.iter().copied().filter(|&x| deg[x] == 1).collect();
    let mut remaining = comp.len();
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            deg[leaf] = 0;
            for &(nb, _) in &adj[leaf] {
                if deg[nb] > 0 {
                    deg[nb] -= 1;
                    if deg[nb] == 1 {
                        next.push(nb);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

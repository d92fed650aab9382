//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use multitree::{canonical_code, CanonicalCode, WeightedForest};
use rand::rngs::StdRng;
use rand::Rng;

pub fn forest(n: usize, edges: &[(usize, usize, u64)]) -> WeightedForest {
    WeightedForest::new(n, edges).expect("valid forest")
}

/// Path on `weights.len() + 1` vertices, weights in order.
pub fn path(weights: &[u64]) -> WeightedForest {
    let edges: Vec<_> = weights.iter().enumerate().map(|(i, &w)| (i, i + 1, w)).collect();
    forest(weights.len() + 1, &edges)
}

/// Star with center 0 plus `isolated` extra vertices.
pub fn star_plus_isolated(weights: &[u64], isolated: usize) -> WeightedForest {
    let edges: Vec<_> = weights.iter().enumerate().map(|(i, &w)| (0, i + 1, w)).collect();
    forest(weights.len() + 1 + isolated, &edges)
}

/// Disjoint edges with the given weights plus isolated vertices up to `n`.
pub fn matching(n: usize, weights: &[u64]) -> WeightedForest {
    let edges: Vec<_> = weights
        .iter()
        .enumerate()
        .map(|(i, &w)| (2 * i, 2 * i + 1, w))
        .collect();
    forest(n, &edges)
}

/// Random forest: each vertex after the first joins an earlier one with
/// probability `p_edge`, then labels are shuffled.
pub fn random_forest(rng: &mut StdRng, n: usize, max_weight: u64, p_edge: f64) -> WeightedForest {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.gen_bool(p_edge) {
            let u = rng.gen_range(0..v);
            edges.push((perm[u], perm[v], rng.gen_range(1..=max_weight)));
        }
    }
    forest(n, &edges)
}

/// Determinant by full permutation expansion.
pub fn leibniz_det(a: &[Vec<i128>]) -> i128 {
    let n = a.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = 0i128;
    heap_permutations(&mut perm, n, &mut |p| {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        let prod: i128 = (0..n).map(|i| a[i][p[i]]).product();
        total += if inversions % 2 == 0 { prod } else { -prod };
    });
    total
}

pub fn heap_permutations(p: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        f(p);
        return;
    }
    for i in 0..k {
        heap_permutations(p, k - 1, f);
        if k & 1 == 0 {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
}

/// `det(tI - A)` at integer `t`.
pub fn char_poly_at(g: &WeightedForest, t: i128) -> i128 {
    let n = g.order();
    let mut a = vec![vec![0i128; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = t;
    }
    for e in g.edges() {
        a[e.u][e.v] = -(e.w as i128);
        a[e.v][e.u] = -(e.w as i128);
    }
    leibniz_det(&a)
}

/// Weight-preserving isomorphism by trying every vertex bijection.
pub fn isomorphic_brute(g: &WeightedForest, h: &WeightedForest) -> bool {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let key = |u: usize, v: usize| (u.min(v), u.max(v));
    let target: BTreeSet<_> = h.edges().iter().map(|e| (key(e.u, e.v), e.w)).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut found = false;
    heap_permutations(&mut perm, n, &mut |p| {
        if !found {
            found = g.edges().iter().all(|e| target.contains(&(key(p[e.u], p[e.v]), e.w)));
        }
    });
    found
}

/// Edge list of the labelled tree with the given Prüfer sequence on `n` vertices.
pub fn prufer_tree(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Every labelled tree on `n >= 2` vertices.
pub fn labelled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 2 {
        return vec![vec![(0, 1)]];
    }
    let len = n - 2;
    let mut out = Vec::new();
    let mut seq = vec![0usize; len];
    loop {
        out.push(prufer_tree(&seq, n));
        let mut i = 0;
        while i < len && seq[i] == n - 1 {
            seq[i] = 0;
            i += 1;
        }
        if i == len {
            return out;
        }
        seq[i] += 1;
    }
}

/// Every positive weight vector of length `parts` summing to `total`.
pub fn weight_vectors(total: u64, parts: usize) -> Vec<Vec<u64>> {
    fn go(total: u64, parts: usize, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 0 {
            if total == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for w in 1..=total.saturating_sub(parts as u64 - 1) {
            acc.push(w);
            go(total - w, parts - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

/// Canonical codes of T(n,m) built from labelled trees and all weightings.
pub fn tree_class_codes_by_prufer(n: usize, m: u64) -> BTreeSet<CanonicalCode> {
    if n == 1 {
        return if m == 0 {
            [canonical_code(&WeightedForest::empty(1))].into()
        } else {
            BTreeSet::new()
        };
    }
    let mut codes = BTreeSet::new();
    for tree in labelled_trees(n) {
        for w in weight_vectors(m, n - 1) {
            let edges: Vec<_> = tree.iter().zip(&w).map(|(&(u, v), &w)| (u, v, w)).collect();
            codes.insert(canonical_code(&forest(n, &edges)));
        }
    }
    codes
}

/// Matching polynomial coefficients of a unit path on `n` vertices: C(n-k, k).
pub fn unit_path_coeffs(n: usize) -> Vec<u128> {
    (0..=n / 2).map(|k| binom((n - k) as u128, k as u128)).collect()
}

pub fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Coefficients of a disjoint union: convolution of the parts.
pub fn convolve(a: &[u128], b: &[u128]) -> Vec<u128> {
    let mut out = vec![0u128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

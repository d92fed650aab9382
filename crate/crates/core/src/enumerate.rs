//! Exhaustive generation of weighted tree and forest classes, one member per
//! weighted-isomorphism class, ordered by canonical code.
//!
//! Unlabeled trees are grown leaf by leaf and deduplicated by canonical code;
//! forests are multisets of such trees. Weights are then laid onto the edges
//! in every possible way and the results deduplicated again, which absorbs
//! edge-orbit symmetry without having to compute automorphisms.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{canonical_code, CanonicalCode, WeightedForest};

/// Default cap on candidates generated before deduplication.
pub const DEFAULT_BUDGET: u128 = 10_000_000;
/// Default largest order accepted by [`unlabeled_trees`].
pub const TREE_BOUND: usize = 12;

/// A class of weighted forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind")]
pub enum ClassSpec {
    /// Trees on `n` vertices with positive weights summing to `m`.
    MultiTree { n: usize, m: u64 },
    /// Forests on `n` vertices with positive weights summing to `m`.
    MultiForest { n: usize, m: u64 },
    /// Trees on `n` vertices with weight sequence `(m-n+2, 1, ..., 1)`.
    FixedSeqTree { n: usize, m: u64 },
    /// Unit-weight forests on `n` vertices with exactly `k` components.
    UnitForest { n: usize, k: usize },
}

impl ClassSpec {
    pub fn order(&self) -> usize {
        match *self {
            ClassSpec::MultiTree { n, .. }
            | ClassSpec::MultiForest { n, .. }
            | ClassSpec::FixedSeqTree { n, .. }
            | ClassSpec::UnitForest { n, .. } => n,
        }
    }

    /// Total weight; for unit forests this is `n - k`.
    pub fn total_weight(&self) -> u64 {
        match *self {
            ClassSpec::MultiTree { m, .. } | ClassSpec::MultiForest { m, .. } | ClassSpec::FixedSeqTree { m, .. } => m,
            ClassSpec::UnitForest { n, k } => n.saturating_sub(k) as u64,
        }
    }

    /// `r = floor(m / (n-1))`, `t = m - r(n-1)`; `None` when `n < 2`.
    pub fn balanced_split(&self) -> Option<(u64, u64)> {
        let n = self.order();
        (n >= 2).then(|| crate::graph::balanced_split(n, self.total_weight()))
    }

    /// The heavy weight `a = m - n + 2`, when it is at least 1.
    pub fn heavy_weight(&self) -> Option<u64> {
        (self.total_weight() + 2)
            .checked_sub(self.order() as u64)
            .filter(|&a| a >= 1)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Parameter(msg));
        match *self {
            ClassSpec::MultiTree { n, m } => {
                if n == 0 || m + 1 < n as u64 {
                    return bad(format!("T(n,m) needs n >= 1 and m >= n-1 (got n={n}, m={m})"));
                }
            }
            ClassSpec::MultiForest { n, .. } => {
                if n == 0 {
                    return bad("F(n,m) needs n >= 1".into());
                }
            }
            ClassSpec::FixedSeqTree { n, m } => {
                if n < 2 || m < n as u64 {
                    return bad(format!("T(n,m;a,1,...,1) needs n >= 2 and m >= n (got n={n}, m={m})"));
                }
            }
            ClassSpec::UnitForest { n, k } => {
                if k == 0 || k > n {
                    return bad(format!("F_n^k needs 1 <= k <= n (got n={n}, k={k})"));
                }
            }
        }
        Ok(())
    }

    pub fn contains(&self, f: &WeightedForest) -> bool {
        if f.order() != self.order() || f.total_weight() != self.total_weight() {
            return false;
        }
        match *self {
            ClassSpec::MultiTree { .. } => f.is_tree(),
            ClassSpec::MultiForest { .. } => true,
            ClassSpec::FixedSeqTree { n, m } => {
                let mut want = vec![1; n - 1];
                want[0] = m - n as u64 + 2;
                f.is_tree() && f.weight_sequence().as_slice() == want.as_slice()
            }
            ClassSpec::UnitForest { k, .. } => f.component_count() == k && f.edges().iter().all(|e| e.w == 1),
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ClassSpec::MultiTree { n, m } => write!(f, "T({n},{m})"),
            ClassSpec::MultiForest { n, m } => write!(f, "F({n},{m})"),
            ClassSpec::FixedSeqTree { n, m } => write!(f, "T({n},{m};{},1,...,1)", m + 2 - n as u64),
            ClassSpec::UnitForest { n, k } => write!(f, "F_{n}^{k}"),
        }
    }
}

/// A class member with its canonical code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMember {
    pub code: CanonicalCode,
    pub forest: WeightedForest,
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) after the multiplication
        match acc.checked_mul((n - i) as u128) {
            Some(x) => acc = x / (i as u128 + 1),
            None => return u128::MAX,
        }
    }
    acc
}

/// Number of compositions of `total` into `parts` positive parts.
pub fn count_compositions(total: u64, parts: usize) -> u128 {
    if parts == 0 {
        return u128::from(total == 0);
    }
    if total < parts as u64 {
        return 0;
    }
    binomial(total - 1, parts as u64 - 1)
}

/// All tuples of `parts` positive integers summing to `total`, in
/// lexicographic order.
pub fn compositions(total: u64, parts: usize) -> Result<Compositions> {
    if parts == 0 || total < parts as u64 {
        return Err(Error::Infeasible { total, parts });
    }
    let mut first = vec![1; parts];
    first[parts - 1] = total - parts as u64 + 1;
    Ok(Compositions { next: Some(first) })
}

#[derive(Debug, Clone)]
pub struct Compositions {
    next: Option<Vec<u64>>,
}

impl Iterator for Compositions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.next.take()?;
        let p = current.len();
        // bump the rightmost entry whose suffix can still give up one unit
        let mut suffix = 0u64;
        let mut successor = None;
        for i in (0..p.saturating_sub(1)).rev() {
            suffix += current[i + 1];
            if suffix > (p - 1 - i) as u64 {
                let mut s = current.clone();
                s[i] += 1;
                for x in &mut s[i + 1..p - 1] {
                    *x = 1;
                }
                s[p - 1] = suffix - 1 - (p - 2 - i) as u64;
                successor = Some(s);
                break;
            }
        }
        self.next = successor;
        Some(current)
    }
}

/// One unit-weight representative per isomorphism class of trees on `n`
/// vertices, sorted by canonical code.
pub fn unlabeled_trees(n: usize) -> Result<Vec<WeightedForest>> {
    unlabeled_trees_bounded(n, TREE_BOUND)
}

pub fn unlabeled_trees_bounded(n: usize, bound: usize) -> Result<Vec<WeightedForest>> {
    if n == 0 {
        return Err(Error::Parameter("trees need at least one vertex".into()));
    }
    if n > bound {
        return Err(Error::SizeBound { size: n, bound });
    }
    Ok(tree_table(n).pop().expect("table has n entries"))
}

/// `table[s - 1]` holds the trees on `s` vertices for `s = 1..=n`.
fn tree_table(n: usize) -> Vec<Vec<WeightedForest>> {
    let mut table = vec![vec![WeightedForest::empty(1)]];
    for size in 2..=n {
        let mut found: BTreeMap<CanonicalCode, WeightedForest> = BTreeMap::new();
        for t in &table[size - 2] {
            let mut edges: Vec<_> = t.edges().iter().map(|e| (e.u, e.v, e.w)).collect();
            for x in 0..size - 1 {
                edges.push((x, size - 1, 1));
                let grown = WeightedForest::new(size, &edges).expect("adding a leaf keeps a tree");
                found.entry(canonical_code(&grown)).or_insert(grown);
                edges.pop();
            }
        }
        table.push(found.into_values().collect());
    }
    table
}

/// Unit-weight forests on `n` vertices, one per isomorphism class, optionally
/// with exactly `components` components.
fn forest_shapes(table: &[Vec<WeightedForest>], n: usize, components: Option<usize>) -> Vec<WeightedForest> {
    let mut out = Vec::new();
    let mut picked: Vec<(usize, usize)> = Vec::new();
    // multisets of (size, index) in non-increasing order
    fn rec(
        table: &[Vec<WeightedForest>],
        left: usize,
        bound: (usize, usize),
        components: Option<usize>,
        picked: &mut Vec<(usize, usize)>,
        out: &mut Vec<WeightedForest>,
    ) {
        if left == 0 {
            if components.is_none_or(|k| k == picked.len()) {
                let mut f = WeightedForest::empty(0);
                for &(s, i) in picked.iter() {
                    f = f.disjoint_union(&table[s - 1][i]);
                }
                out.push(f);
            }
            return;
        }
        if components.is_some_and(|k| picked.len() >= k) {
            return;
        }
        for size in (1..=left.min(bound.0)).rev() {
            let top = if size == bound.0 {
                bound.1
            } else {
                table[size - 1].len() - 1
            };
            for idx in (0..=top).rev() {
                picked.push((size, idx));
                rec(table, left - size, (size, idx), components, picked, out);
                picked.pop();
            }
        }
    }
    if n == 0 {
        return vec![WeightedForest::empty(0)];
    }
    rec(table, n, (n, table[n - 1].len() - 1), components, &mut picked, &mut out);
    out
}

fn check_budget(estimate: u128, budget: u128) -> Result<()> {
    if estimate > budget {
        return Err(Error::BudgetExceeded { estimate, budget });
    }
    Ok(())
}

/// Candidates generated before deduplication; what the budget is compared to.
pub fn estimate_class_size(spec: &ClassSpec) -> Result<u128> {
    spec.validate()?;
    let n = spec.order();
    if n > TREE_BOUND {
        return Err(Error::SizeBound {
            size: n,
            bound: TREE_BOUND,
        });
    }
    let table = tree_table(n);
    Ok(match *spec {
        ClassSpec::MultiTree { m, .. } => table[n - 1].len() as u128 * count_compositions(m, n - 1),
        ClassSpec::FixedSeqTree { .. } => (table[n - 1].len() * (n - 1)) as u128,
        ClassSpec::MultiForest { m, .. } => forest_shapes(&table, n, None)
            .iter()
            .map(|f| count_compositions(m, f.edge_count()))
            .fold(0u128, u128::saturating_add),
        ClassSpec::UnitForest { k, .. } => forest_shapes(&table, n, Some(k)).len() as u128,
    })
}

/// Every member of the class exactly once up to weighted isomorphism, sorted
/// by canonical code.
pub fn enumerate_class(spec: &ClassSpec, budget: u128) -> Result<Vec<ClassMember>> {
    let estimate = estimate_class_size(spec)?;
    check_budget(estimate, budget)?;
    let n = spec.order();
    let table = tree_table(n);
    let mut found: BTreeMap<CanonicalCode, WeightedForest> = BTreeMap::new();
    let mut add = |f: WeightedForest| {
        found.entry(canonical_code(&f)).or_insert(f);
    };

    match *spec {
        ClassSpec::MultiTree { m, .. } => {
            if n == 1 {
                if m == 0 {
                    add(WeightedForest::empty(1));
                }
            } else {
                for tree in &table[n - 1] {
                    for w in compositions(m, n - 1)? {
                        add(tree.with_weights(&w)?);
                    }
                }
            }
        }
        ClassSpec::FixedSeqTree { m, .. } => {
            let a = m - n as u64 + 2;
            for tree in &table[n - 1] {
                for heavy in 0..n - 1 {
                    let mut w = vec![1; n - 1];
                    w[heavy] = a;
                    add(tree.with_weights(&w)?);
                }
            }
        }
        ClassSpec::MultiForest { m, .. } => {
            for shape in forest_shapes(&table, n, None) {
                let e = shape.edge_count();
                if e == 0 {
                    if m == 0 {
                        add(shape);
                    }
                    continue;
                }
                if m < e as u64 {
                    continue;
                }
                for w in compositions(m, e)? {
                    add(shape.with_weights(&w)?);
                }
            }
        }
        ClassSpec::UnitForest { k, .. } => {
            for shape in forest_shapes(&table, n, Some(k)) {
                add(shape);
            }
        }
    }

    Ok(found
        .into_iter()
        .map(|(code, forest)| ClassMember { code, forest })
        .collect())
}

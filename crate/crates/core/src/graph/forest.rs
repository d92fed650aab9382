use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weighted edge `{u, v}` with positive integer weight `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: u64,
}

impl Edge {
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// An acyclic graph on vertices `0..n` whose edges carry positive integer
/// weights. Equivalently a multiforest where an edge of weight `w` stands for
/// `w` parallel edges.
///
/// Instances are only built through [`WeightedForest::new`], so every value
/// in circulation is a valid forest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedForest {
    n: usize,
    edges: Vec<Edge>,
}

impl WeightedForest {
    /// Validates and builds a forest on `n` vertices.
    pub fn new(n: usize, edges: &[(usize, usize, u64)]) -> Result<Self> {
        let mut uf = UnionFind::new(n);
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        let mut out = Vec::with_capacity(edges.len());
        for &(u, v, w) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x as i64, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if w == 0 {
                return Err(Error::NonPositiveWeight { u, v, w: 0 });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge { u, v });
            }
            if !uf.union(u, v) {
                return Err(Error::Cycle { u, v });
            }
            out.push(Edge { u, v, w });
        }
        Ok(WeightedForest { n, edges: out })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        WeightedForest { n, edges: Vec::new() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Total weight `m`, i.e. the number of edges of the multigraph.
    pub fn total_weight(&self) -> u64 {
        self.edges.iter().map(|e| e.w).sum()
    }

    pub fn component_count(&self) -> usize {
        self.n - self.edges.len()
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Neighbour lists as `(neighbour, weight)` pairs.
    pub fn adjacency(&self) -> Vec<Vec<(usize, u64)>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u].push((e.v, e.w));
            adj[e.v].push((e.u, e.w));
        }
        adj
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.n);
        for e in &self.edges {
            uf.union(e.u, e.v);
        }
        let mut index = vec![usize::MAX; self.n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for x in 0..self.n {
            let r = uf.find(x);
            if index[r] == usize::MAX {
                index[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[index[r]].push(x);
        }
        comps
    }

    pub fn weight_sequence(&self) -> WeightSequence {
        WeightSequence::from_weights(self.edges.iter().map(|e| e.w))
    }

    /// Relabels vertices: vertex `x` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Parameter(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let edges: Vec<_> = self.edges.iter().map(|e| (perm[e.u], perm[e.v], e.w)).collect();
        WeightedForest::new(self.n, &edges)
    }

    /// Keeps the vertices in `keep` (relabelled consecutively in ascending
    /// order) and every edge with both ends kept.
    pub fn induced(&self, keep: &[bool]) -> Self {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for x in 0..self.n {
            if keep[x] {
                label[x] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| keep[e.u] && keep[e.v])
            .map(|e| Edge {
                u: label[e.u],
                v: label[e.v],
                w: e.w,
            })
            .collect();
        WeightedForest { n: next, edges }
    }

    /// Disjoint union; the vertices of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &WeightedForest) -> Self {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge {
            u: e.u + shift,
            v: e.v + shift,
            w: e.w,
        }));
        WeightedForest {
            n: self.n + other.n,
            edges,
        }
    }

    /// Same underlying graph with new edge weights, in edge order.
    pub fn with_weights(&self, weights: &[u64]) -> Result<Self> {
        if weights.len() != self.edges.len() {
            return Err(Error::Parameter(format!(
                "{} weights for {} edges",
                weights.len(),
                self.edges.len()
            )));
        }
        if let Some((e, _)) = self.edges.iter().zip(weights).find(|(_, &w)| w == 0) {
            return Err(Error::NonPositiveWeight { u: e.u, v: e.v, w: 0 });
        }
        let edges = self.edges.iter().zip(weights).map(|(e, &w)| Edge { w, ..*e }).collect();
        Ok(WeightedForest { n: self.n, edges })
    }

    /// For a pendant vertex `v` with neighbour `u`, returns `(F - v, F - v - u)`
    /// with the surviving vertices relabelled consecutively.
    pub fn delete_pendant_pair(&self, v: usize) -> Result<(WeightedForest, WeightedForest)> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v as i64,
                n: self.n,
            });
        }
        let incident: Vec<&Edge> = self.edges.iter().filter(|e| e.u == v || e.v == v).collect();
        if incident.len() != 1 {
            return Err(Error::NotPendant {
                vertex: v,
                degree: incident.len(),
            });
        }
        let u = incident[0].other(v);
        let mut keep = vec![true; self.n];
        keep[v] = false;
        let without_v = self.induced(&keep);
        keep[u] = false;
        let without_vu = self.induced(&keep);
        Ok((without_v, without_vu))
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n as i64,
            edges: self
                .edges
                .iter()
                .map(|e| [e.u as i64, e.v as i64, e.w as i64])
                .collect(),
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let g: GraphJson = serde_json::from_str(s)?;
        WeightedForest::try_from(g)
    }
}

impl fmt::Display for WeightedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(&self.to_json()).map_err(|_| fmt::Error)?)
    }
}

/// Interchange format: `{"n": 4, "edges": [[0,1,2],[0,2,1],[0,3,1]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: i64,
    pub edges: Vec<[i64; 3]>,
}

impl TryFrom<GraphJson> for WeightedForest {
    type Error = Error;

    fn try_from(g: GraphJson) -> Result<Self> {
        if g.n < 0 {
            return Err(Error::Json(format!("negative vertex count {}", g.n)));
        }
        let n = g.n as usize;
        let mut edges = Vec::with_capacity(g.edges.len());
        for [u, v, w] in g.edges {
            for x in [u, v] {
                if x < 0 || x as usize >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if w <= 0 {
                return Err(Error::NonPositiveWeight {
                    u: u as usize,
                    v: v as usize,
                    w,
                });
            }
            edges.push((u as usize, v as usize, w as u64));
        }
        WeightedForest::new(n, &edges)
    }
}

/// Edge weights sorted non-increasingly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightSequence(Vec<u64>);

impl WeightSequence {
    pub fn from_weights(weights: impl IntoIterator<Item = u64>) -> Self {
        let mut w: Vec<u64> = weights.into_iter().collect();
        w.sort_unstable_by(|a, b| b.cmp(a));
        WeightSequence(w)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn sum_of_squares(&self) -> u128 {
        self.0.iter().map(|&w| (w as u128) * (w as u128)).sum()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already connected.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

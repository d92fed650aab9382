use serde::Serialize;

use super::forest::WeightedForest;
use crate::error::{Error, Result};

/// The extremal graphs that have names of their own.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum NamedGraph {
    /// Star `K_{1,n-1}` with total weight `m` spread as evenly as possible.
    BalancedStar { n: usize, m: u64 },
    /// Star with weight sequence `(m-n+2, 1, ..., 1)`.
    ExtremalStar { n: usize, m: u64 },
    /// Path with weights `(m-n+2, 1, ..., 1)`, the heavy edge pendant.
    PStar { n: usize, m: u64 },
    /// Unit-weight `K_{1,m}` plus `n-m-1` isolated vertices, `m <= n-2`.
    UnitStarForest { n: usize, m: u64 },
    /// Unit-weight `K_{1,n-k}` plus `k-1` isolated vertices.
    MinForest { n: usize, k: usize },
    /// `n-k` disjoint unit edges plus `2k-n` isolated vertices, `2k >= n`.
    MaxMatchForest { n: usize, k: usize },
    /// `k-1` disjoint unit edges plus a unit path on `n-2k+2` vertices, `2k < n`.
    MaxPathForest { n: usize, k: usize },
    /// Unit-weight star on `n` vertices.
    UnitStar { n: usize },
    /// Disjoint edges with the given weights plus isolated vertices up to `n`.
    Matching { n: usize, weights: Vec<u64> },
    /// Path on four vertices with edge weights `a, b, c` in order.
    WeightedP4 { a: u64, b: u64, c: u64 },
}

fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}

/// `(r, t)` with `m = r(n-1) + t`, `0 <= t < n-1`.
pub fn balanced_split(n: usize, m: u64) -> (u64, u64) {
    let parts = (n - 1) as u64;
    (m / parts, m % parts)
}

impl NamedGraph {
    pub fn build(&self) -> Result<WeightedForest> {
        match *self {
            NamedGraph::BalancedStar { n, m } => {
                check_star(n, m)?;
                let (r, t) = balanced_split(n, m);
                // heavier edges first so the weight sequence reads in order
                let weights: Vec<u64> = (0..n - 1).map(|i| if (i as u64) < t { r + 1 } else { r }).collect();
                star(&weights)
            }
            NamedGraph::ExtremalStar { n, m } => {
                check_star(n, m)?;
                star(&heavy_first(n, m))
            }
            NamedGraph::PStar { n, m } => {
                if n < 2 || m < n as u64 {
                    return Err(param(format!("PStar needs n >= 2 and m >= n (got n={n}, m={m})")));
                }
                path(&heavy_first(n, m))
            }
            NamedGraph::UnitStarForest { n, m } => {
                if n < 2 || m > n as u64 - 2 {
                    return Err(param(format!("UnitStarForest needs m <= n-2 (got n={n}, m={m})")));
                }
                let s = star(&vec![1; m as usize])?;
                Ok(s.disjoint_union(&WeightedForest::empty(n - m as usize - 1)))
            }
            NamedGraph::MinForest { n, k } => {
                check_components(n, k)?;
                let s = star(&vec![1; n - k])?;
                Ok(s.disjoint_union(&WeightedForest::empty(k - 1)))
            }
            NamedGraph::MaxMatchForest { n, k } => {
                check_components(n, k)?;
                if 2 * k < n {
                    return Err(param(format!("MaxMatchForest needs 2k >= n (got n={n}, k={k})")));
                }
                matching(n, &vec![1; n - k])
            }
            NamedGraph::MaxPathForest { n, k } => {
                check_components(n, k)?;
                if 2 * k >= n {
                    return Err(param(format!("MaxPathForest needs 2k < n (got n={n}, k={k})")));
                }
                let pairs = matching(2 * (k - 1), &vec![1; k - 1])?;
                Ok(pairs.disjoint_union(&path(&vec![1; n - 2 * k + 1])?))
            }
            NamedGraph::UnitStar { n } => {
                if n == 0 {
                    return Err(param("UnitStar needs n >= 1"));
                }
                star(&vec![1; n - 1])
            }
            NamedGraph::Matching { n, ref weights } => matching(n, weights),
            NamedGraph::WeightedP4 { a, b, c } => {
                if a == 0 || b == 0 || c == 0 {
                    return Err(param("WeightedP4 weights must be positive"));
                }
                path(&[a, b, c])
            }
        }
    }

    /// Parses names such as `balanced-star`, with parameters supplied separately.
    pub fn from_name(name: &str, n: usize, m: u64, k: usize) -> Result<Self> {
        Ok(match name {
            "balanced-star" => NamedGraph::BalancedStar { n, m },
            "extremal-star" => NamedGraph::ExtremalStar { n, m },
            "p-star" => NamedGraph::PStar { n, m },
            "unit-star-forest" => NamedGraph::UnitStarForest { n, m },
            "min-forest" => NamedGraph::MinForest { n, k },
            "max-match-forest" => NamedGraph::MaxMatchForest { n, k },
            "max-path-forest" => NamedGraph::MaxPathForest { n, k },
            "unit-star" => NamedGraph::UnitStar { n },
            other => return Err(param(format!("unknown named graph `{other}`"))),
        })
    }
}

pub fn make_named(spec: &NamedGraph) -> Result<WeightedForest> {
    spec.build()
}

fn check_star(n: usize, m: u64) -> Result<()> {
    if n < 2 || m < n as u64 - 1 {
        return Err(param(format!("star needs n >= 2 and m >= n-1 (got n={n}, m={m})")));
    }
    Ok(())
}

fn check_components(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(param(format!("need 1 <= k <= n (got n={n}, k={k})")));
    }
    Ok(())
}

fn heavy_first(n: usize, m: u64) -> Vec<u64> {
    let mut w = vec![1; n - 1];
    w[0] = m - n as u64 + 2;
    w
}

/// Star centred at vertex 0 with the given leaf weights.
pub(crate) fn star(weights: &[u64]) -> Result<WeightedForest> {
    let edges: Vec<_> = weights.iter().enumerate().map(|(i, &w)| (0, i + 1, w)).collect();
    WeightedForest::new(weights.len() + 1, &edges)
}

/// Path `0-1-...-len` with the given edge weights in order.
pub(crate) fn path(weights: &[u64]) -> Result<WeightedForest> {
    let edges: Vec<_> = weights.iter().enumerate().map(|(i, &w)| (i, i + 1, w)).collect();
    WeightedForest::new(weights.len() + 1, &edges)
}

fn matching(n: usize, weights: &[u64]) -> Result<WeightedForest> {
    if 2 * weights.len() > n {
        return Err(param(format!(
            "{} disjoint edges need more than {n} vertices",
            weights.len()
        )));
    }
    let edges: Vec<_> = weights
        .iter()
        .enumerate()
        .map(|(i, &w)| (2 * i, 2 * i + 1, w))
        .collect();
    WeightedForest::new(n, &edges)
}

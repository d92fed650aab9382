//! Energy of a weighted forest by three independent routes: a symmetric
//! eigensolve of the adjacency matrix, the Coulson integral over the matching
//! coefficients, and closed forms for the named extremal graphs.

mod coulson;
mod eigen;

use serde::Serialize;

pub use coulson::{energy_coulson, COULSON_TOLERANCE};
pub use eigen::symmetric_eigenvalues;

use crate::error::{Error, Result};
use crate::graph::{balanced_split, NamedGraph, WeightedForest};

/// Sorted eigenvalues of `A(F)` and their absolute sum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub energy: f64,
}

pub fn adjacency_matrix(forest: &WeightedForest) -> Vec<Vec<u64>> {
    let n = forest.order();
    let mut a = vec![vec![0; n]; n];
    for e in forest.edges() {
        a[e.u][e.v] = e.w;
        a[e.v][e.u] = e.w;
    }
    a
}

pub fn spectrum(forest: &WeightedForest) -> Result<Spectrum> {
    let a: Vec<Vec<f64>> = adjacency_matrix(forest)
        .into_iter()
        .map(|row| row.into_iter().map(|w| w as f64).collect())
        .collect();
    let eigenvalues = symmetric_eigenvalues(a)?;
    let energy = eigenvalues.iter().map(|x| x.abs()).sum();
    Ok(Spectrum { eigenvalues, energy })
}

/// Sum of absolute eigenvalues.
pub fn energy_eigen(forest: &WeightedForest) -> Result<f64> {
    spectrum(forest).map(|s| s.energy)
}

/// Closed-form energy of a named graph, for the families that have one.
pub fn energy_closed(spec: &NamedGraph) -> Result<f64> {
    // validates the parameters
    spec.build()?;
    let v = match *spec {
        NamedGraph::BalancedStar { n, m } => {
            let (r, t) = balanced_split(n, m);
            2.0 * ((m * r + t * r + t) as f64).sqrt()
        }
        NamedGraph::ExtremalStar { n, m } => {
            let a = (m - n as u64 + 2) as f64;
            2.0 * (a * a + (n - 2) as f64).sqrt()
        }
        NamedGraph::UnitStarForest { m, .. } => 2.0 * (m as f64).sqrt(),
        NamedGraph::UnitStar { n } => 2.0 * ((n - 1) as f64).sqrt(),
        NamedGraph::MinForest { n, k } => 2.0 * ((n - k) as f64).sqrt(),
        NamedGraph::MaxMatchForest { n, k } => 2.0 * (n - k) as f64,
        NamedGraph::Matching { ref weights, .. } => 2.0 * weights.iter().sum::<u64>() as f64,
        NamedGraph::WeightedP4 { a, b, c } => {
            let (ac, b) = ((a + c) as f64, b as f64);
            2.0 * (ac * ac + b * b).sqrt()
        }
        NamedGraph::PStar { .. } | NamedGraph::MaxPathForest { .. } => {
            return Err(Error::Parameter(format!("no closed-form energy for {spec:?}")))
        }
    };
    Ok(v)
}

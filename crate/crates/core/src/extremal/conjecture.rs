//! Evidence harness for the maximum-energy tree of `T(n,m)`.
//!
//! The claim under test is that, for `n >= 5` and `m >= n`, the path with
//! weights `(m-n+2, 1, ..., 1)` and the heavy weight on a pendant edge is the
//! unique maximum. Nothing here assumes it: the exhaustive scan decides, and
//! the record says whether the scan agreed.

use serde::Serialize;

use super::search::{search, Direction, ExtremalReport};
use crate::charpoly::coeffs;
use crate::enumerate::ClassSpec;
use crate::error::{Error, Result};
use crate::graph::{canonical_code, make_named, CanonicalCode, GraphJson, NamedGraph, WeightedForest};
use crate::spectrum::{energy_coulson, energy_eigen};

/// Agreement required between the eigenvalue and Coulson energies of the winner.
pub const ROUTE_TOLERANCE: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Supports,
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureEvidence {
    pub n: usize,
    pub m: u64,
    pub class_size: usize,
    pub verdict: Verdict,
    pub p_star_code: CanonicalCode,
    pub p_star_energy: f64,
    pub winner_code: CanonicalCode,
    pub winner: GraphJson,
    pub winner_energy_eigen: f64,
    pub winner_energy_coulson: f64,
    /// Eigenvalue and Coulson energies of the winner within [`ROUTE_TOLERANCE`].
    pub routes_agree: bool,
    pub unique: bool,
    pub argset: Vec<CanonicalCode>,
    /// A maximiser other than `P_n^*`, when the scan found one.
    pub counterexample: Option<GraphJson>,
    #[serde(skip)]
    pub report: ExtremalReport,
}

impl ConjectureEvidence {
    /// Winner found, its energy confirmed by both routes, and the verdict
    /// consistent with the argset.
    pub fn is_consistent(&self) -> bool {
        let supports = self.unique && self.argset == [self.p_star_code.clone()];
        self.routes_agree && (supports == (self.verdict == Verdict::Supports))
    }
}

pub fn conjecture_evidence(n: usize, m: u64, budget: u128) -> Result<ConjectureEvidence> {
    if n < 5 || m < n as u64 {
        return Err(Error::Precondition(format!(
            "needs n >= 5 and m >= n (got n={n}, m={m})"
        )));
    }
    let report = search(&ClassSpec::MultiTree { n, m }, Direction::Max, budget)?;
    let p_star = make_named(&NamedGraph::PStar { n, m })?;
    let p_star_code = canonical_code(&p_star);

    let winner = WeightedForest::try_from(report.winners[0].clone())?;
    let winner_energy_eigen = energy_eigen(&winner)?;
    let winner_energy_coulson = energy_coulson(&coeffs(&winner))?;
    let supports = report.unique && report.argset[0] == p_star_code;
    let counterexample = report
        .argset
        .iter()
        .position(|c| *c != p_star_code)
        .map(|i| report.winners[i].clone());

    Ok(ConjectureEvidence {
        n,
        m,
        class_size: report.class_size,
        verdict: if supports {
            Verdict::Supports
        } else {
            Verdict::Counterexample
        },
        p_star_energy: energy_eigen(&p_star)?,
        p_star_code,
        winner_code: report.argset[0].clone(),
        winner: report.winners[0].clone(),
        winner_energy_eigen,
        winner_energy_coulson,
        routes_agree: (winner_energy_eigen - winner_energy_coulson).abs() <= ROUTE_TOLERANCE,
        unique: report.unique,
        argset: report.argset.clone(),
        counterexample,
        report,
    })
}

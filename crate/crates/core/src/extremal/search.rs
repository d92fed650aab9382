use serde::Serialize;

use super::exact::{certify, ExactEnergy};
use crate::charpoly::{coeffs, CoeffVector};
use crate::enumerate::{enumerate_class, ClassMember, ClassSpec};
use crate::error::{Error, Result};
use crate::graph::{CanonicalCode, GraphJson, WeightedForest};
use crate::quasiorder::{compare, OrderRelation};
use crate::spectrum::spectrum;

/// Relative width of the band around the best energy inside which members
/// are compared exactly rather than by float.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Min,
    Max,
}

impl Direction {
    /// Whether energy `a` is better than `b` in this direction.
    fn better(self, a: f64, b: f64) -> bool {
        match self {
            Direction::Min => a < b,
            Direction::Max => a > b,
        }
    }

    /// Whether `rel = compare(member, other)` shows `member` strictly worse.
    fn dominated(self, rel: OrderRelation) -> bool {
        match self {
            Direction::Min => rel.is_strictly_greater(),
            Direction::Max => rel.is_strictly_less(),
        }
    }
}

impl std::str::FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Direction::Min),
            "max" => Ok(Direction::Max),
            other => Err(Error::Parameter(format!("direction must be min or max, not `{other}`"))),
        }
    }
}

/// Why a member is, or is not, extremal.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "basis", rename_all = "snake_case")]
pub enum Basis {
    /// First member of the argset, which the other certificates refer to.
    Winner,
    /// Same coefficient vector as the winner, hence the same energy.
    EqualCoefficients,
    /// Exact energy normal forms agree with the winner's.
    EqualExactEnergy,
    /// Strictly dominated, on the losing side, by the member `over`.
    QuasiOrder { over: CanonicalCode },
    /// Exact energy normal form strictly worse than that of `over`.
    ExactEnergy { over: CanonicalCode },
    /// Float energy worse than the winner's by `gap`, outside the tie band.
    EnergyGap { gap: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MemberCertificate {
    pub code: CanonicalCode,
    pub energy: f64,
    pub b: Vec<String>,
    /// `compare(member, winner)`.
    pub relation_to_winner: OrderRelation,
    #[serde(flatten)]
    pub basis: Basis,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub spec: ClassSpec,
    /// Set when the scan ran over a filtered subclass of `spec`.
    pub subclass: Option<String>,
    pub direction: Direction,
    pub value: f64,
    pub argset: Vec<CanonicalCode>,
    pub winners: Vec<GraphJson>,
    pub unique: bool,
    pub class_size: usize,
    pub certificates: Vec<MemberCertificate>,
}

impl ExtremalReport {
    pub fn winner_code(&self) -> &CanonicalCode {
        &self.argset[0]
    }

    pub fn certificate(&self, code: &CanonicalCode) -> Option<&MemberCertificate> {
        self.certificates.iter().find(|c| &c.code == code)
    }
}

/// A class member together with its exact coefficients and float spectrum.
#[derive(Debug, Clone)]
pub struct Evaluated {
    pub code: CanonicalCode,
    pub forest: WeightedForest,
    pub coeffs: CoeffVector,
    pub eigenvalues: Vec<f64>,
    pub energy: f64,
}

pub fn evaluate(member: ClassMember) -> Result<Evaluated> {
    let s = spectrum(&member.forest)?;
    Ok(Evaluated {
        coeffs: coeffs(&member.forest),
        code: member.code,
        forest: member.forest,
        eigenvalues: s.eigenvalues,
        energy: s.energy,
    })
}

/// Exhaustive extremal-energy scan over a class.
pub fn search(spec: &ClassSpec, direction: Direction, budget: u128) -> Result<ExtremalReport> {
    search_with_tolerance(spec, direction, budget, TIE_TOLERANCE)
}

/// [`search`] with a custom relative tie band.
pub fn search_with_tolerance(
    spec: &ClassSpec,
    direction: Direction,
    budget: u128,
    tie_tolerance: f64,
) -> Result<ExtremalReport> {
    let members = enumerate_class(spec, budget)?;
    search_members_with_tolerance(spec, None, members, direction, tie_tolerance)
}

/// Exhaustive scan over the members of `spec` accepted by `keep`.
pub fn search_filtered<F>(
    spec: &ClassSpec,
    label: &str,
    keep: F,
    direction: Direction,
    budget: u128,
) -> Result<ExtremalReport>
where
    F: Fn(&WeightedForest) -> bool,
{
    let members = enumerate_class(spec, budget)?
        .into_iter()
        .filter(|m| keep(&m.forest))
        .collect();
    search_members(spec, Some(label.to_string()), members, direction)
}

/// Scans `members`. Everything within the tie band of the best float energy
/// is settled exactly: equal vectors tie, strict domination excludes, and
/// incomparable vectors tie or separate only through exact energies.
/// Anything left undecided is an [`Error::UnresolvedTie`].
pub fn search_members(
    spec: &ClassSpec,
    subclass: Option<String>,
    members: Vec<ClassMember>,
    direction: Direction,
) -> Result<ExtremalReport> {
    search_members_with_tolerance(spec, subclass, members, direction, TIE_TOLERANCE)
}

pub fn search_members_with_tolerance(
    spec: &ClassSpec,
    subclass: Option<String>,
    members: Vec<ClassMember>,
    direction: Direction,
    tie_tolerance: f64,
) -> Result<ExtremalReport> {
    if !(tie_tolerance > 0.0 && tie_tolerance.is_finite()) {
        return Err(Error::Parameter(format!(
            "tie tolerance must be positive, got {tie_tolerance}"
        )));
    }
    if members.is_empty() {
        let what = subclass.clone().unwrap_or_else(|| spec.to_string());
        return Err(Error::EmptyClass(what));
    }
    let evaluated: Vec<Evaluated> = members.into_iter().map(evaluate).collect::<Result<_>>()?;

    let mut best = 0;
    for (i, e) in evaluated.iter().enumerate() {
        if direction.better(e.energy, evaluated[best].energy) {
            best = i;
        }
    }
    let band = tie_tolerance * (1.0 + evaluated[best].energy.abs());
    let mut candidates: Vec<usize> = (0..evaluated.len())
        .filter(|&i| (evaluated[i].energy - evaluated[best].energy).abs() <= band)
        .collect();

    let mut pruned: Vec<Option<Basis>> = vec![None; evaluated.len()];

    // strict domination within the band
    for &i in &candidates {
        for &j in &candidates {
            if i == j || pruned[j].is_some() {
                continue;
            }
            if direction.dominated(compare(&evaluated[i].coeffs, &evaluated[j].coeffs)?) {
                pruned[i] = Some(Basis::QuasiOrder {
                    over: evaluated[j].code.clone(),
                });
                break;
            }
        }
    }
    candidates.retain(|&i| pruned[i].is_none());

    // classes of identical vectors; a single class is an exact tie
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &i in &candidates {
        match classes
            .iter_mut()
            .find(|c| evaluated[c[0]].coeffs == evaluated[i].coeffs)
        {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }

    let mut exact_tie = false;
    if classes.len() > 1 {
        let certs: Vec<Option<ExactEnergy>> = classes
            .iter()
            .map(|c| certify(&evaluated[c[0]].coeffs, &evaluated[c[0]].eigenvalues))
            .collect();
        if let Some(pos) = certs.iter().position(Option::is_none) {
            let other = if pos == 0 { 1 } else { 0 };
            return Err(Error::UnresolvedTie(
                evaluated[classes[pos][0]].code.to_string(),
                evaluated[classes[other][0]].code.to_string(),
            ));
        }
        let certs: Vec<ExactEnergy> = certs.into_iter().map(Option::unwrap).collect();
        let mut top = 0;
        for (ci, cert) in certs.iter().enumerate() {
            if direction.better(cert.value(), certs[top].value()) {
                top = ci;
            }
        }
        for (ci, cert) in certs.iter().enumerate() {
            if *cert == certs[top] {
                continue;
            }
            // distinct normal forms are distinct reals; refuse a float
            // ordering too close to call
            let gap = (cert.value() - certs[top].value()).abs();
            if gap <= f64::EPSILON * 64.0 * (1.0 + cert.value().abs()) {
                return Err(Error::UnresolvedTie(
                    evaluated[classes[ci][0]].code.to_string(),
                    evaluated[classes[top][0]].code.to_string(),
                ));
            }
            for &i in &classes[ci] {
                pruned[i] = Some(Basis::ExactEnergy {
                    over: evaluated[classes[top][0]].code.clone(),
                });
            }
        }
        candidates.retain(|&i| pruned[i].is_none());
        exact_tie = true;
    }

    let winner = candidates[0];
    let winner_coeffs = &evaluated[winner].coeffs;
    let value = evaluated[winner].energy;
    let mut certificates = Vec::with_capacity(evaluated.len());
    for (i, e) in evaluated.iter().enumerate() {
        let relation = compare(&e.coeffs, winner_coeffs)?;
        let basis = if i == winner {
            Basis::Winner
        } else if candidates.contains(&i) {
            if e.coeffs == *winner_coeffs {
                Basis::EqualCoefficients
            } else {
                debug_assert!(exact_tie);
                Basis::EqualExactEnergy
            }
        } else if let Some(b) = pruned[i].take() {
            b
        } else if direction.dominated(relation) {
            Basis::QuasiOrder {
                over: evaluated[winner].code.clone(),
            }
        } else {
            Basis::EnergyGap {
                gap: (value - e.energy).abs(),
            }
        };
        certificates.push(MemberCertificate {
            code: e.code.clone(),
            energy: e.energy,
            b: e.coeffs.to_decimal_strings(),
            relation_to_winner: relation,
            basis,
        });
    }

    Ok(ExtremalReport {
        spec: *spec,
        subclass,
        direction,
        value,
        argset: candidates.iter().map(|&i| evaluated[i].code.clone()).collect(),
        winners: candidates.iter().map(|&i| evaluated[i].forest.to_json()).collect(),
        unique: candidates.len() == 1,
        class_size: evaluated.len(),
        certificates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::DEFAULT_BUDGET;
    use crate::graph::{canonical_code, make_named, NamedGraph};

    #[test]
    fn balanced_star_minimises_t_5_7() {
        let r = search(&ClassSpec::MultiTree { n: 5, m: 7 }, Direction::Min, DEFAULT_BUDGET).unwrap();
        let star = make_named(&NamedGraph::BalancedStar { n: 5, m: 7 }).unwrap();
        assert!(r.unique);
        assert_eq!(r.argset, vec![canonical_code(&star)]);
        assert!((r.value - 2.0 * 13f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn forest_maximum_ties_are_exact() {
        let r = search(&ClassSpec::MultiForest { n: 5, m: 6 }, Direction::Max, DEFAULT_BUDGET).unwrap();
        assert!(!r.unique);
        assert!((r.value - 12.0).abs() < 1e-9);
        // one heavy edge; 5+1, 4+2, 3+3 pairs
        assert_eq!(r.argset.len(), 4);
        for c in &r.certificates {
            if !r.argset.contains(&c.code) {
                assert!(c.energy < 12.0 - 1e-9);
            }
        }
    }

    #[test]
    fn unit_forest_minimum() {
        let r = search(&ClassSpec::UnitForest { n: 7, k: 3 }, Direction::Min, DEFAULT_BUDGET).unwrap();
        let f = make_named(&NamedGraph::MinForest { n: 7, k: 3 }).unwrap();
        assert!(r.unique);
        assert_eq!(r.argset, vec![canonical_code(&f)]);
        assert!((r.value - 4.0).abs() < 1e-9);
    }

    #[test]
    fn incomparable_float_ties_are_refused() {
        // weighted P_4s (a,1,c) with a+c fixed tie in energy with different vectors
        let r = search(&ClassSpec::MultiTree { n: 4, m: 6 }, Direction::Max, DEFAULT_BUDGET);
        assert!(matches!(r, Err(Error::UnresolvedTie(_, _))), "{r:?}");
    }

    #[test]
    fn empty_subclass() {
        let r = search_filtered(
            &ClassSpec::MultiTree { n: 4, m: 4 },
            "none",
            |_| false,
            Direction::Min,
            100,
        );
        assert!(matches!(r, Err(Error::EmptyClass(_))));
    }
}

//! Registry of verifiable extremal statements.
//!
//! Each entry names the class to scan, the direction, the graph expected to
//! win and where its value comes from. Lemma-style statements that are not
//! searches carry their own checking routine.

use std::collections::BTreeSet;

use serde::Serialize;

use super::search::{search, search_filtered, search_members, Direction, ExtremalReport};
use crate::charpoly::{b1, coeffs};
use crate::enumerate::{compositions, enumerate_class, ClassSpec};
use crate::error::{Error, Result};
use crate::graph::{canonical_code, make_named, path, star, CanonicalCode, NamedGraph, WeightedForest};
use crate::quasiorder::{compare, OrderRelation};
use crate::spectrum::{energy_closed, energy_eigen};

/// Agreement required between a searched value and the expected one,
/// relative to `1 + value`.
pub const VALUE_TOLERANCE: f64 = 1e-9;

/// Parameters of a verification run; which ones are required depends on the
/// statement.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: Option<usize>,
    pub m: Option<u64>,
    pub k: Option<usize>,
}

impl Params {
    pub fn nm(n: usize, m: u64) -> Self {
        Params {
            n: Some(n),
            m: Some(m),
            k: None,
        }
    }

    pub fn nk(n: usize, k: usize) -> Self {
        Params {
            n: Some(n),
            m: None,
            k: Some(k),
        }
    }

    pub fn only_n(n: usize) -> Self {
        Params {
            n: Some(n),
            ..Params::default()
        }
    }

    pub fn only_m(m: u64) -> Self {
        Params {
            m: Some(m),
            ..Params::default()
        }
    }

    fn n(&self) -> Result<usize> {
        self.n.ok_or_else(|| Error::Parameter("--n is required".into()))
    }

    fn m(&self) -> Result<u64> {
        self.m.ok_or_else(|| Error::Parameter("--m is required".into()))
    }

    fn k(&self) -> Result<usize> {
        self.k.ok_or_else(|| Error::Parameter("--k is required".into()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Expected {
    pub codes: Vec<CanonicalCode>,
    pub value: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationResult {
    pub theorem_id: String,
    pub statement: String,
    pub params: Params,
    pub pass: bool,
    pub expected: Expected,
    pub observed: Vec<ExtremalReport>,
    pub cases_checked: usize,
    pub discrepancy: Option<String>,
}

/// Where the expected extremal value comes from.
#[derive(Debug, Clone, Copy)]
pub enum ValueSource {
    /// Closed form of the expected named graph.
    ClosedForm,
    /// Eigenvalue energy of the expected graph, for winners without a formula.
    ExpectedGraph,
}

/// Restriction of a class to a subclass before searching.
#[derive(Debug, Clone, Copy)]
pub enum Subclass {
    Stars,
}

impl Subclass {
    fn label(self) -> &'static str {
        match self {
            Subclass::Stars => "stars",
        }
    }

    fn keep(self, f: &WeightedForest) -> bool {
        match self {
            Subclass::Stars => f.is_tree() && f.max_degree() + 1 == f.order(),
        }
    }
}

/// An extremal search whose winner should be a single named graph.
#[derive(Debug, Clone, Copy)]
pub struct UniqueExtremum {
    pub class: fn(&Params) -> Result<ClassSpec>,
    pub subclass: Option<Subclass>,
    pub direction: Direction,
    pub expected: fn(&Params) -> Result<NamedGraph>,
    pub value: ValueSource,
    /// Also require every other member to be strictly dominated by the
    /// winner in the quasi-order.
    pub dominates_all: bool,
}

#[derive(Debug, Clone, Copy)]
pub enum Claim {
    UniqueExtremum(UniqueExtremum),
    Custom(fn(&Params, u128) -> Result<Outcome>),
}

#[derive(Debug, Clone, Copy)]
pub struct TheoremEntry {
    pub id: &'static str,
    pub aliases: &'static [&'static str],
    pub statement: &'static str,
    pub claim: Claim,
}

/// What a custom check reports back.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub expected: Expected,
    pub observed: Vec<ExtremalReport>,
    pub cases_checked: usize,
    pub failures: Vec<String>,
}

fn tree_class(p: &Params) -> Result<ClassSpec> {
    Ok(ClassSpec::MultiTree { n: p.n()?, m: p.m()? })
}

fn fixed_seq_class(p: &Params) -> Result<ClassSpec> {
    Ok(ClassSpec::FixedSeqTree { n: p.n()?, m: p.m()? })
}

fn unit_forest_class(p: &Params) -> Result<ClassSpec> {
    Ok(ClassSpec::UnitForest { n: p.n()?, k: p.k()? })
}

fn balanced_star(p: &Params) -> Result<NamedGraph> {
    Ok(NamedGraph::BalancedStar { n: p.n()?, m: p.m()? })
}

fn forest_minimiser(p: &Params) -> Result<NamedGraph> {
    let (n, m) = (p.n()?, p.m()?);
    if m + 2 <= n as u64 {
        Ok(NamedGraph::UnitStarForest { n, m })
    } else {
        Ok(NamedGraph::BalancedStar { n, m })
    }
}

fn extremal_star(p: &Params) -> Result<NamedGraph> {
    Ok(NamedGraph::ExtremalStar { n: p.n()?, m: p.m()? })
}

fn p_star(p: &Params) -> Result<NamedGraph> {
    Ok(NamedGraph::PStar { n: p.n()?, m: p.m()? })
}

fn min_forest(p: &Params) -> Result<NamedGraph> {
    Ok(NamedGraph::MinForest { n: p.n()?, k: p.k()? })
}

fn max_match_forest(p: &Params) -> Result<NamedGraph> {
    Ok(NamedGraph::MaxMatchForest { n: p.n()?, k: p.k()? })
}

fn max_path_forest(p: &Params) -> Result<NamedGraph> {
    Ok(NamedGraph::MaxPathForest { n: p.n()?, k: p.k()? })
}

fn require(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(msg.into()))
    }
}

pub const REGISTRY: &[TheoremEntry] = &[
    TheoremEntry {
        id: "lem2.1",
        aliases: &["b1-sum-of-squares"],
        statement: "b_1 equals the sum of squared edge weights on every member of F(n,m)",
        claim: Claim::Custom(check_b1_sum_of_squares),
    },
    TheoremEntry {
        id: "thm2.2",
        aliases: &["balanced-star-dominated"],
        statement: "the balanced star is strictly below every other tree of T(n,m) in the quasi-order",
        claim: Claim::UniqueExtremum(UniqueExtremum {
            class: tree_class,
            subclass: None,
            direction: Direction::Min,
            expected: balanced_star,
            value: ValueSource::ClosedForm,
            dominates_all: true,
        }),
    },
    TheoremEntry {
        id: "thm2.3",
        aliases: &["balanced-star-min"],
        statement: "the balanced star is the unique minimum of T(n,m) with energy 2*sqrt(mr+tr+t)",
        claim: Claim::UniqueExtremum(UniqueExtremum {
            class: tree_class,
            subclass: None,
            direction: Direction::Min,
            expected: balanced_star,
            value: ValueSource::ClosedForm,
            dominates_all: false,
        }),
    },
    TheoremEntry {
        id: "thm2.4",
        aliases: &["forest-min"],
        statement: "F(n,m) is minimised uniquely by the unit star forest (m <= n-2) or the balanced star",
        claim: Claim::Custom(check_forest_minimum),
    },
    TheoremEntry {
        id: "thm2.5",
        aliases: &["fixed-sequence-star-min"],
        statement: "among trees with a given weight sequence the star is the unique minimum and strictly dominated",
        claim: Claim::Custom(check_fixed_sequence_star),
    },
    TheoremEntry {
        id: "thm3.1",
        aliases: &["forest-max"],
        statement: "F(n,m) is maximised, with energy 2m, exactly by forests whose components are K_1 or K_2",
        claim: Claim::Custom(check_forest_maximum),
    },
    TheoremEntry {
        id: "lem3.2",
        aliases: &["heavy-sequence-squares"],
        statement: "(m-n+2,1,...,1) has strictly the largest sum of squares among positive sequences of length n-1 summing to m",
        claim: Claim::Custom(check_heavy_sequence),
    },
    TheoremEntry {
        id: "thm3.3",
        aliases: &["extremal-star-max"],
        statement: "among weighted stars of T(n,m) the (m-n+2,1,...,1) star is the unique maximum",
        claim: Claim::UniqueExtremum(UniqueExtremum {
            class: tree_class,
            subclass: Some(Subclass::Stars),
            direction: Direction::Max,
            expected: extremal_star,
            value: ValueSource::ClosedForm,
            dominates_all: true,
        }),
    },
    TheoremEntry {
        id: "ex3.4",
        aliases: &["weighted-p4"],
        statement: "a weighted P_4 (a,b,c) has energy 2*sqrt((a+c)^2+b^2), maximised exactly at b=1",
        claim: Claim::Custom(check_weighted_p4),
    },
    TheoremEntry {
        id: "thm3.6",
        aliases: &["p-star-dominates"],
        statement: "every other tree with weight sequence (a,1,...,1) is strictly below P_n^*",
        claim: Claim::UniqueExtremum(UniqueExtremum {
            class: fixed_seq_class,
            subclass: None,
            direction: Direction::Max,
            expected: p_star,
            value: ValueSource::ExpectedGraph,
            dominates_all: true,
        }),
    },
    TheoremEntry {
        id: "cor3.7",
        aliases: &["p-star-max"],
        statement: "P_n^* is the unique maximum among trees with weight sequence (a,1,...,1)",
        claim: Claim::UniqueExtremum(UniqueExtremum {
            class: fixed_seq_class,
            subclass: None,
            direction: Direction::Max,
            expected: p_star,
            value: ValueSource::ExpectedGraph,
            dominates_all: false,
        }),
    },
    TheoremEntry {
        id: "lem4.2",
        aliases: &["sqrt-subadditive"],
        statement: "sum of square roots >= square root of the sum, equality iff at most one term is nonzero",
        claim: Claim::Custom(check_sqrt_inequality),
    },
    TheoremEntry {
        id: "thm4.3",
        aliases: &["unit-forest-min"],
        statement: "(K_{1,n-k}, K_1, ..., K_1) is the unique minimum of F_n^k with energy 2*sqrt(n-k)",
        claim: Claim::UniqueExtremum(UniqueExtremum {
            class: unit_forest_class,
            subclass: None,
            direction: Direction::Min,
            expected: min_forest,
            value: ValueSource::ClosedForm,
            dominates_all: false,
        }),
    },
    TheoremEntry {
        id: "lem4.4",
        aliases: &["two-paths"],
        statement: "P_k + P_{n-k} is strictly below P_2 + P_{n-2} for k not in {2, n-2}",
        claim: Claim::Custom(check_two_paths),
    },
    TheoremEntry {
        id: "thm4.5",
        aliases: &["unit-forest-max-matching"],
        statement: "for 2k >= n, M_n^k is the unique maximum of F_n^k with energy 2(n-k)",
        claim: Claim::UniqueExtremum(UniqueExtremum {
            class: unit_forest_class,
            subclass: None,
            direction: Direction::Max,
            expected: max_match_forest,
            value: ValueSource::ClosedForm,
            dominates_all: false,
        }),
    },
    TheoremEntry {
        id: "thm4.6",
        aliases: &["unit-forest-max-path"],
        statement: "for 2k < n, P_n^k is the unique maximum of F_n^k",
        claim: Claim::UniqueExtremum(UniqueExtremum {
            class: unit_forest_class,
            subclass: None,
            direction: Direction::Max,
            expected: max_path_forest,
            value: ValueSource::ExpectedGraph,
            dominates_all: false,
        }),
    },
];

pub fn lookup(id: &str) -> Result<&'static TheoremEntry> {
    let id = id.to_ascii_lowercase();
    REGISTRY
        .iter()
        .find(|t| t.id == id || t.aliases.contains(&id.as_str()))
        .ok_or(Error::UnknownTheorem(id))
}

/// Runs the named statement at the given parameters.
pub fn verify(theorem_id: &str, params: &Params, budget: u128) -> Result<VerificationResult> {
    let entry = lookup(theorem_id)?;
    let outcome = match entry.claim {
        Claim::UniqueExtremum(u) => check_unique_extremum(&u, params, budget)?,
        Claim::Custom(f) => f(params, budget)?,
    };
    let discrepancy = (!outcome.failures.is_empty()).then(|| outcome.failures.join("; "));
    Ok(VerificationResult {
        theorem_id: entry.id.to_string(),
        statement: entry.statement.to_string(),
        params: *params,
        pass: outcome.failures.is_empty(),
        expected: outcome.expected,
        observed: outcome.observed,
        cases_checked: outcome.cases_checked,
        discrepancy,
    })
}

fn value_matches(observed: f64, expected: f64) -> bool {
    (observed - expected).abs() <= VALUE_TOLERANCE * (1.0 + expected.abs())
}

/// Checks a report against a single expected winner; returns failure notes.
fn match_unique(report: &ExtremalReport, code: &CanonicalCode, value: f64, dominates_all: bool) -> Vec<String> {
    let mut failures = Vec::new();
    if report.argset != [code.clone()] {
        let got: Vec<String> = report.argset.iter().map(ToString::to_string).collect();
        failures.push(format!("argset is [{}], expected [{code}]", got.join(", ")));
    }
    if !value_matches(report.value, value) {
        failures.push(format!("value {} differs from expected {value}", report.value));
    }
    if dominates_all {
        for c in &report.certificates {
            if &c.code == code {
                continue;
            }
            let ok = match report.direction {
                Direction::Min => c.relation_to_winner.is_strictly_greater(),
                Direction::Max => c.relation_to_winner.is_strictly_less(),
            };
            if !ok || report.winner_code() != code {
                failures.push(format!(
                    "{} is not strictly dominated by {code}: {:?}",
                    c.code, c.relation_to_winner
                ));
            }
        }
    }
    failures
}

fn check_unique_extremum(u: &UniqueExtremum, params: &Params, budget: u128) -> Result<Outcome> {
    let spec = (u.class)(params)?;
    let named = (u.expected)(params)?;
    let graph = make_named(&named)?;
    let code = canonical_code(&graph);
    let value = match u.value {
        ValueSource::ClosedForm => energy_closed(&named)?,
        ValueSource::ExpectedGraph => energy_eigen(&graph)?,
    };
    let report = match u.subclass {
        None => search(&spec, u.direction, budget)?,
        Some(sub) => search_filtered(&spec, sub.label(), |f| sub.keep(f), u.direction, budget)?,
    };
    let failures = match_unique(&report, &code, value, u.dominates_all);
    Ok(Outcome {
        expected: Expected {
            codes: vec![code],
            value: Some(value),
        },
        cases_checked: report.class_size,
        observed: vec![report],
        failures,
    })
}

fn check_forest_minimum(params: &Params, budget: u128) -> Result<Outcome> {
    let (n, m) = (params.n()?, params.m()?);
    require(n >= 2, "n >= 2")?;
    check_unique_extremum(
        &UniqueExtremum {
            class: |p| Ok(ClassSpec::MultiForest { n: p.n()?, m: p.m()? }),
            subclass: None,
            direction: Direction::Min,
            expected: forest_minimiser,
            value: ValueSource::ClosedForm,
            dominates_all: true,
        },
        &Params::nm(n, m),
        budget,
    )
}

fn check_fixed_sequence_star(params: &Params, budget: u128) -> Result<Outcome> {
    let spec = ClassSpec::MultiTree {
        n: params.n()?,
        m: params.m()?,
    };
    require(spec.order() >= 2, "n >= 2")?;
    let members = enumerate_class(&spec, budget)?;
    let sequences: BTreeSet<Vec<u64>> = members
        .iter()
        .map(|m| m.forest.weight_sequence().as_slice().to_vec())
        .collect();

    let mut observed = Vec::new();
    let mut expected_codes = Vec::new();
    let mut failures = Vec::new();
    for seq in sequences.iter().rev() {
        let subset: Vec<_> = members
            .iter()
            .filter(|m| m.forest.weight_sequence().as_slice() == seq.as_slice())
            .cloned()
            .collect();
        let label = format!("weight sequence {seq:?}");
        let report = search_members(&spec, Some(label.clone()), subset, Direction::Min)?;
        let s = star(seq)?;
        let value = 2.0 * (seq.iter().map(|&w| (w * w) as f64).sum::<f64>()).sqrt();
        let code = canonical_code(&s);
        for f in match_unique(&report, &code, value, true) {
            failures.push(format!("{label}: {f}"));
        }
        expected_codes.push(code);
        observed.push(report);
    }
    Ok(Outcome {
        expected: Expected {
            codes: expected_codes,
            value: None,
        },
        cases_checked: members.len(),
        observed,
        failures,
    })
}

/// Forests on `n` vertices made of disjoint edges with total weight `m`,
/// built directly from multisets of edge weights.
pub fn matching_forests(n: usize, m: u64) -> Vec<WeightedForest> {
    let mut out = Vec::new();
    if m == 0 {
        return vec![WeightedForest::empty(n)];
    }
    for edges in 1..=(n / 2).min(m as usize) {
        for weights in compositions(m, edges).expect("edges <= m") {
            if weights.windows(2).all(|w| w[0] >= w[1]) {
                out.push(make_named(&NamedGraph::Matching { n, weights }).expect("fits in n"));
            }
        }
    }
    out
}

fn check_forest_maximum(params: &Params, budget: u128) -> Result<Outcome> {
    let (n, m) = (params.n()?, params.m()?);
    require(m == 0 || n >= 2, "a positive total weight needs n >= 2")?;
    let spec = ClassSpec::MultiForest { n, m };
    let report = search(&spec, Direction::Max, budget)?;
    let expected: BTreeSet<CanonicalCode> = matching_forests(n, m).iter().map(canonical_code).collect();
    let observed: BTreeSet<CanonicalCode> = report.argset.iter().cloned().collect();
    let value = 2.0 * m as f64;

    let mut failures = Vec::new();
    if expected != observed {
        failures.push(format!(
            "argset has {} members, direct construction gives {}",
            observed.len(),
            expected.len()
        ));
    }
    if !value_matches(report.value, value) {
        failures.push(format!("value {} differs from 2m = {value}", report.value));
    }
    if report.unique != (expected.len() == 1) {
        failures.push("uniqueness flag disagrees with the construction".into());
    }
    Ok(Outcome {
        expected: Expected {
            codes: expected.into_iter().collect(),
            value: Some(value),
        },
        cases_checked: report.class_size,
        observed: vec![report],
        failures,
    })
}

fn check_b1_sum_of_squares(params: &Params, budget: u128) -> Result<Outcome> {
    let spec = ClassSpec::MultiForest {
        n: params.n()?,
        m: params.m()?,
    };
    let members = enumerate_class(&spec, budget)?;
    let mut failures = Vec::new();
    for m in &members {
        if coeffs(&m.forest).get(1) != &b1(&m.forest) {
            failures.push(format!("b_1 mismatch on {}", m.code));
        }
    }
    Ok(Outcome {
        expected: Expected {
            codes: Vec::new(),
            value: None,
        },
        observed: Vec::new(),
        cases_checked: members.len(),
        failures,
    })
}

/// Non-increasing positive sequences of length `len` summing to `total`.
fn partitions_into(total: u64, len: usize) -> Vec<Vec<u64>> {
    fn rec(left: u64, slots: usize, cap: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if slots == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let lo = 1.max(left.saturating_sub(cap * (slots as u64 - 1)));
        let hi = cap.min(left.saturating_sub(slots as u64 - 1));
        for x in (lo..=hi).rev() {
            cur.push(x);
            rec(left - x, slots - 1, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len > 0 && total >= len as u64 {
        rec(total, len, total, &mut Vec::new(), &mut out);
    }
    out
}

fn check_heavy_sequence(params: &Params, _budget: u128) -> Result<Outcome> {
    let (n, m) = (params.n()?, params.m()?);
    require(n >= 2 && m + 1 >= n as u64, "n >= 2 and m >= n-1")?;
    let len = n - 1;
    let mut heavy = vec![1; len];
    heavy[0] = m + 2 - n as u64;
    let squares = |v: &[u64]| v.iter().map(|&x| x * x).sum::<u64>();
    let top = squares(&heavy);
    let mut failures = Vec::new();
    let all = partitions_into(m, len);
    for b in &all {
        if *b != heavy && squares(b) >= top {
            failures.push(format!("{b:?} has sum of squares {} >= {top}", squares(b)));
        }
    }
    Ok(Outcome {
        expected: Expected {
            codes: Vec::new(),
            value: Some(top as f64),
        },
        observed: Vec::new(),
        cases_checked: all.len(),
        failures,
    })
}

/// Defaults: dimension 6, entries summing to at most 12.
fn check_sqrt_inequality(params: &Params, _budget: u128) -> Result<Outcome> {
    let dim = params.n.unwrap_or(6);
    let max_sum = params.m.unwrap_or(12);
    require(
        (1..=8).contains(&dim) && max_sum <= 24,
        "dimension <= 8 and sum bound <= 24",
    )?;
    let mut failures = Vec::new();
    let mut cases = 0;
    let mut v = vec![0u64; dim];
    loop {
        let sum: u64 = v.iter().sum();
        if sum <= max_sum {
            cases += 1;
            let lhs: f64 = v.iter().map(|&x| (x as f64).sqrt()).sum();
            let rhs = (sum as f64).sqrt();
            let nonzero = v.iter().filter(|&&x| x > 0).count();
            let ok = if nonzero <= 1 { lhs == rhs } else { lhs > rhs + 1e-12 };
            if !ok {
                failures.push(format!("{v:?}: {lhs} vs {rhs}"));
            }
        }
        // odometer over [0, max_sum]^dim
        let mut i = 0;
        while i < dim && v[i] == max_sum {
            v[i] = 0;
            i += 1;
        }
        if i == dim {
            break;
        }
        v[i] += 1;
    }
    Ok(Outcome {
        expected: Expected {
            codes: Vec::new(),
            value: None,
        },
        observed: Vec::new(),
        cases_checked: cases,
        failures,
    })
}

fn unit_paths(a: usize, b: usize) -> Result<WeightedForest> {
    Ok(path(&vec![1; a - 1])?.disjoint_union(&path(&vec![1; b - 1])?))
}

fn check_two_paths(params: &Params, _budget: u128) -> Result<Outcome> {
    let n = params.n()?;
    require(n >= 3, "n >= 3")?;
    let reference = coeffs(&unit_paths(2, n - 2)?);
    let mut failures = Vec::new();
    let mut cases = 0;
    for k in 1..n {
        if k == 2 || k == n - 2 {
            continue;
        }
        cases += 1;
        let rel = compare(&coeffs(&unit_paths(k, n - k)?), &reference)?;
        if !rel.is_strictly_less() {
            failures.push(format!("P_{k} + P_{}: {rel:?}", n - k));
        }
    }
    Ok(Outcome {
        expected: Expected {
            codes: vec![canonical_code(&unit_paths(2, n - 2)?)],
            value: None,
        },
        observed: Vec::new(),
        cases_checked: cases,
        failures,
    })
}

fn check_weighted_p4(params: &Params, _budget: u128) -> Result<Outcome> {
    let m = params.m()?;
    require(m >= 3, "m >= 3")?;
    let mut failures = Vec::new();
    let mut cases = 0;
    let best = 2.0 * (((m - 1) * (m - 1) + 1) as f64).sqrt();
    let mut best_seen = f64::NEG_INFINITY;
    let mut argmax_b = BTreeSet::new();
    for w in compositions(m, 3)? {
        let (a, b, c) = (w[0], w[1], w[2]);
        cases += 1;
        let e = energy_eigen(&make_named(&NamedGraph::WeightedP4 { a, b, c })?)?;
        let formula = 2.0 * (((m - b) * (m - b) + b * b) as f64).sqrt();
        if !value_matches(e, formula) {
            failures.push(format!("({a},{b},{c}): energy {e} vs formula {formula}"));
        }
        if e > best_seen + VALUE_TOLERANCE * (1.0 + best) {
            best_seen = e;
            argmax_b.clear();
        }
        if (e - best_seen).abs() <= VALUE_TOLERANCE * (1.0 + best) {
            argmax_b.insert(b);
        }
    }
    if argmax_b != BTreeSet::from([1]) {
        failures.push(format!("maximum attained at b in {argmax_b:?}"));
    }
    if !value_matches(best_seen, best) {
        failures.push(format!("maximum {best_seen} vs 2*sqrt((m-1)^2+1) = {best}"));
    }
    Ok(Outcome {
        expected: Expected {
            codes: Vec::new(),
            value: Some(best),
        },
        observed: Vec::new(),
        cases_checked: cases,
        failures,
    })
}

/// Quasi-order relation of `g` to `h`, both forests of the same order.
pub fn relation(g: &WeightedForest, h: &WeightedForest) -> Result<OrderRelation> {
    compare(&coeffs(g), &coeffs(h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::DEFAULT_BUDGET;

    fn run(id: &str, p: Params) -> VerificationResult {
        let r = verify(id, &p, DEFAULT_BUDGET).unwrap();
        assert!(r.pass, "{id} {p:?}: {:?}", r.discrepancy);
        r
    }

    #[test]
    fn registry_ids_are_unique() {
        let mut ids = BTreeSet::new();
        for t in REGISTRY {
            assert!(ids.insert(t.id));
            for a in t.aliases {
                assert!(ids.insert(a));
            }
        }
        assert_eq!(lookup("THM2.3").unwrap().id, "thm2.3");
        assert!(matches!(lookup("thm9.9"), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn search_style_statements() {
        run("thm2.2", Params::nm(5, 7));
        run("thm2.3", Params::nm(5, 7));
        run("thm2.4", Params::nm(6, 3));
        run("thm2.4", Params::nm(6, 7));
        run("thm3.3", Params::nm(5, 8));
        run("thm3.6", Params::nm(5, 8));
        run("cor3.7", Params::nm(4, 6));
        run("thm4.3", Params::nk(7, 3));
        run("thm4.5", Params::nk(7, 5));
        run("thm4.6", Params::nk(7, 3));
    }

    #[test]
    fn custom_statements() {
        run("lem2.1", Params::nm(5, 6));
        run("thm2.5", Params::nm(5, 7));
        let r = run("thm3.1", Params::nm(5, 6));
        assert_eq!(r.expected.codes.len(), 4);
        run("lem3.2", Params::nm(6, 12));
        let r = run("lem4.2", Params::default());
        assert!(r.cases_checked > 1000);
        run("lem4.4", Params::only_n(9));
        run("ex3.4", Params::only_m(7));
    }

    #[test]
    fn wrong_expectation_fails() {
        // the balanced star does not maximise
        let u = UniqueExtremum {
            class: tree_class,
            subclass: None,
            direction: Direction::Max,
            expected: balanced_star,
            value: ValueSource::ClosedForm,
            dominates_all: false,
        };
        let out = check_unique_extremum(&u, &Params::nm(5, 7), DEFAULT_BUDGET).unwrap();
        assert!(!out.failures.is_empty());
    }

    #[test]
    fn missing_parameters() {
        assert!(matches!(
            verify("thm2.3", &Params::only_n(5), DEFAULT_BUDGET),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            verify("lem4.4", &Params::only_n(2), DEFAULT_BUDGET),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn partitions() {
        assert_eq!(partitions_into(6, 3), vec![vec![4, 1, 1], vec![3, 2, 1], vec![2, 2, 2]]);
        assert!(partitions_into(2, 3).is_empty());
    }

    #[test]
    fn matching_forest_construction() {
        let codes: BTreeSet<_> = matching_forests(5, 6).iter().map(canonical_code).collect();
        assert_eq!(codes.len(), 4);
        assert_eq!(matching_forests(3, 4).len(), 1);
    }
}

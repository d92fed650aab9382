//! Command-line front end.
//!
//! Exit codes: 0 success or pass, 1 verification failure or counterexample,
//! 2 usage or input error, 3 budget or size refusal.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::charpoly::{coeffs, coeffs_oracle, CoeffVector};
use crate::enumerate::{enumerate_class, estimate_class_size, ClassSpec, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::extremal::{
    conjecture_evidence, search_with_tolerance, verify, Direction, ExtremalReport, Params, Verdict, TIE_TOLERANCE,
};
use crate::graph::{canonical_code, make_named, NamedGraph, WeightedForest};
use crate::quasiorder::{compare, OrderRelation};
use crate::spectrum::{energy_closed, energy_coulson, spectrum};

pub const BUDGET_ENV: &str = "MULTITREE_BUDGET";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_REFUSED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "multitree",
    version,
    about = "Energies and extremal searches for integer-weighted trees and forests"
)]
pub struct RunConfig {
    /// Candidate cap for enumerations (overrides MULTITREE_BUDGET).
    #[arg(long, global = true)]
    pub budget: Option<u128>,

    /// Write the primary output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Output format of the primary output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy of a graph.
    Energy {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// eigen, coulson, or closed:<name>
        #[arg(long, default_value = "eigen")]
        method: String,
    },
    /// Matching coefficients b_0..b_{n/2}.
    Coeffs {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = CoeffMethod::Recurrence)]
        method: CoeffMethod,
    },
    /// Quasi-order relation between two graphs of equal order.
    Compare {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// List a class, one graph per line.
    Enumerate {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long)]
        count_only: bool,
    },
    /// Exhaustive extremal-energy search.
    Search {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_enum)]
        direction: DirectionArg,
        /// Relative tie band around the best energy.
        #[arg(long, default_value_t = TIE_TOLERANCE)]
        tie_tolerance: f64,
        /// Also write the whole class as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Check a registered statement at the given parameters.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Evidence record for the maximum-energy tree of T(n,m).
    Conjecture {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct ClassArgs {
    #[arg(long, value_enum)]
    pub class: ClassKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ClassKind {
    #[value(name = "T")]
    T,
    #[value(name = "F")]
    F,
    #[value(name = "Fnk")]
    Fnk,
    #[value(name = "Tfixed")]
    Tfixed,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum DirectionArg {
    Min,
    Max,
}

/// Pendant-elimination recurrence, or brute-force matching enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoeffMethod {
    Recurrence,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl ClassArgs {
    fn spec(&self) -> Result<ClassSpec> {
        let need_m = || {
            self.m
                .ok_or_else(|| Error::Parameter("--m is required for this class".into()))
        };
        let spec = match self.class {
            ClassKind::T => ClassSpec::MultiTree {
                n: self.n,
                m: need_m()?,
            },
            ClassKind::F => ClassSpec::MultiForest {
                n: self.n,
                m: need_m()?,
            },
            ClassKind::Tfixed => ClassSpec::FixedSeqTree {
                n: self.n,
                m: need_m()?,
            },
            ClassKind::Fnk => ClassSpec::UnitForest {
                n: self.n,
                k: self
                    .k
                    .ok_or_else(|| Error::Parameter("--k is required for Fnk".into()))?,
            },
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded { .. } | Error::SizeBound { .. } => EXIT_REFUSED,
        Error::Convergence { .. }
        | Error::Quadrature(_)
        | Error::MonotonicityViolation(_)
        | Error::UnresolvedTie(..)
        | Error::EmptyClass(_) => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

/// Parses `argv` (including the program name) and runs it, reading graphs
/// from `stdin` when no `--in` is given.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{e}");
            return EXIT_OK;
        }
    };
    match execute(&config, stdin, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn budget(config: &RunConfig) -> Result<u128> {
    let b = match config.budget {
        Some(b) => b,
        None => match std::env::var(BUDGET_ENV) {
            Ok(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Parameter(format!("{BUDGET_ENV} is not a number: `{s}`")))?,
            Err(_) => DEFAULT_BUDGET,
        },
    };
    if b == 0 {
        return Err(Error::Parameter("budget must be positive".into()));
    }
    Ok(b)
}

fn read_graph(path: Option<&Path>, stdin: &mut dyn Read) -> Result<WeightedForest> {
    let text = match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p)?,
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    WeightedForest::from_json_str(&text)
}

fn emit(config: &RunConfig, stdout: &mut dyn Write, text: &str) -> Result<()> {
    match &config.out {
        Some(p) => fs::write(p, format!("{text}\n"))?,
        None => writeln!(stdout, "{text}")?,
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

fn execute(config: &RunConfig, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<i32> {
    match &config.command {
        Command::Energy { input, method } => {
            let g = read_graph(input.as_deref(), stdin)?;
            let (value, code) = energy_command(&g, method)?;
            let text = match config.format {
                Format::Json => to_json(&value)?,
                Format::Csv => single_row_csv(&g, value["energy"].as_f64().unwrap_or(f64::NAN), &coeffs(&g)),
            };
            emit(config, stdout, &text)?;
            Ok(code)
        }
        Command::Coeffs { input, method } => {
            let g = read_graph(input.as_deref(), stdin)?;
            let c = match method {
                CoeffMethod::Recurrence => coeffs(&g),
                CoeffMethod::Oracle => coeffs_oracle(&g)?,
            };
            let text = match config.format {
                Format::Json => serde_json::to_string(&c)?,
                Format::Csv => single_row_csv(&g, spectrum(&g)?.energy, &c),
            };
            emit(config, stdout, &text)?;
            Ok(EXIT_OK)
        }
        Command::Compare { left, right } => {
            json_only(config, "compare")?;
            let a = read_graph(Some(left), stdin)?;
            let b = read_graph(Some(right), stdin)?;
            let (ca, cb) = (coeffs(&a), coeffs(&b));
            let rel = compare(&ca, &cb)?;
            let (witness, other) = match rel {
                OrderRelation::StrictlyLess { witness } | OrderRelation::StrictlyGreater { witness } => {
                    (Some(witness), None)
                }
                OrderRelation::Incomparable { less_at, greater_at } => (Some(less_at), Some(greater_at)),
                OrderRelation::Equivalent => (None, None),
            };
            let out = json!({
                "relation": rel.name(),
                "witness": witness,
                "witness_greater": other,
                "b1": ca.to_decimal_strings(),
                "b2": cb.to_decimal_strings(),
            });
            emit(config, stdout, &to_json(&out)?)?;
            Ok(EXIT_OK)
        }
        Command::Enumerate { class, count_only } => {
            let spec = class.spec()?;
            let budget = budget(config)?;
            if *count_only {
                json_only(config, "enumerate --count-only")?;
                let members = enumerate_class(&spec, budget)?;
                let out = json!({
                    "class": spec.to_string(),
                    "count": members.len(),
                    "candidates": estimate_class_size(&spec)?.to_string(),
                });
                emit(config, stdout, &serde_json::to_string(&out)?)?;
                return Ok(EXIT_OK);
            }
            let members = enumerate_class(&spec, budget)?;
            let text = match config.format {
                Format::Json => members
                    .iter()
                    .map(|m| serde_json::to_string(&m.forest.to_json()))
                    .collect::<std::result::Result<Vec<_>, _>>()?
                    .join("\n"),
                Format::Csv => {
                    let rows: Vec<_> = members
                        .iter()
                        .map(|m| {
                            let e = spectrum(&m.forest)?.energy;
                            Ok(CsvRow {
                                code: m.code.to_string(),
                                energy: e,
                                b: coeffs(&m.forest).to_decimal_strings(),
                            })
                        })
                        .collect::<Result<_>>()?;
                    csv_table(spec.order(), spec.total_weight(), &rows)
                }
            };
            emit(config, stdout, &text)?;
            Ok(EXIT_OK)
        }
        Command::Search {
            class,
            direction,
            tie_tolerance,
            csv,
        } => {
            let spec = class.spec()?;
            let direction = match direction {
                DirectionArg::Min => Direction::Min,
                DirectionArg::Max => Direction::Max,
            };
            let report = search_with_tolerance(&spec, direction, budget(config)?, *tie_tolerance)?;
            if let Some(p) = csv {
                fs::write(p, report_csv(&report) + "\n")?;
            }
            let text = match config.format {
                Format::Json => to_json(&report)?,
                Format::Csv => report_csv(&report),
            };
            emit(config, stdout, &text)?;
            Ok(EXIT_OK)
        }
        Command::Verify { theorem, n, m, k } => {
            json_only(config, "verify")?;
            let params = Params { n: *n, m: *m, k: *k };
            let result = verify(theorem, &params, budget(config)?)?;
            emit(config, stdout, &to_json(&result)?)?;
            Ok(if result.pass { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Conjecture { n, m, csv } => {
            let ev = conjecture_evidence(*n, *m, budget(config)?)?;
            if let Some(p) = csv {
                fs::write(p, report_csv(&ev.report) + "\n")?;
            }
            let text = match config.format {
                Format::Json => to_json(&ev)?,
                Format::Csv => report_csv(&ev.report),
            };
            emit(config, stdout, &text)?;
            Ok(if ev.verdict == Verdict::Supports && ev.is_consistent() {
                EXIT_OK
            } else {
                EXIT_FAIL
            })
        }
    }
}

fn json_only(config: &RunConfig, what: &str) -> Result<()> {
    match config.format {
        Format::Json => Ok(()),
        Format::Csv => Err(Error::Parameter(format!("{what} has no CSV output"))),
    }
}

fn single_row_csv(g: &WeightedForest, energy: f64, c: &CoeffVector) -> String {
    let row = CsvRow {
        code: canonical_code(g).to_string(),
        energy,
        b: c.to_decimal_strings(),
    };
    csv_table(g.order(), g.total_weight(), &[row])
}

fn energy_command(g: &WeightedForest, method: &str) -> Result<(serde_json::Value, i32)> {
    let s = spectrum(g)?;
    match method {
        "eigen" => Ok((
            json!({ "method": "eigen", "energy": s.energy, "eigenvalues": s.eigenvalues }),
            EXIT_OK,
        )),
        "coulson" => {
            let e = energy_coulson(&coeffs(g))?;
            Ok((
                json!({ "method": "coulson", "energy": e, "eigenvalues": s.eigenvalues }),
                EXIT_OK,
            ))
        }
        other => {
            let name = other
                .strip_prefix("closed:")
                .ok_or_else(|| Error::Parameter(format!("unknown method `{other}`")))?;
            let named = named_from_graph(name, g)?;
            let value = energy_closed(&named)?;
            let matches = canonical_code(&make_named(&named)?) == canonical_code(g);
            let out = json!({
                "method": other,
                "energy": value,
                "eigenvalues": s.eigenvalues,
                "matches_named": matches,
            });
            Ok((out, if matches { EXIT_OK } else { EXIT_FAIL }))
        }
    }
}

/// Reads the named family's parameters off the graph itself.
fn named_from_graph(name: &str, g: &WeightedForest) -> Result<NamedGraph> {
    match name {
        "matching" => {
            let weights = g.weight_sequence().as_slice().to_vec();
            Ok(NamedGraph::Matching { n: g.order(), weights })
        }
        "weighted-p4" => {
            if !(g.order() == 4 && g.is_tree() && g.max_degree() == 2) {
                return Err(Error::Parameter("closed:weighted-p4 needs a path on 4 vertices".into()));
            }
            let adj = g.adjacency();
            let start = (0..4).find(|&x| adj[x].len() == 1).expect("a path has an end");
            let mut weights = Vec::with_capacity(3);
            let (mut prev, mut cur) = (usize::MAX, start);
            while let Some(&(next, w)) = adj[cur].iter().find(|&&(x, _)| x != prev) {
                weights.push(w);
                prev = cur;
                cur = next;
            }
            Ok(NamedGraph::WeightedP4 {
                a: weights[0],
                b: weights[1],
                c: weights[2],
            })
        }
        _ => NamedGraph::from_name(name, g.order(), g.total_weight(), g.component_count()),
    }
}

struct CsvRow {
    code: String,
    energy: f64,
    b: Vec<String>,
}

/// Columns: canonical_code, n, m, energy, b0..bK.
fn csv_table(n: usize, m: u64, rows: &[CsvRow]) -> String {
    let mut out = String::from("canonical_code,n,m,energy");
    for k in 0..=n / 2 {
        out.push_str(&format!(",b{k}"));
    }
    for r in rows {
        out.push_str(&format!("\n{},{n},{m},{}", r.code, r.energy));
        for b in &r.b {
            out.push(',');
            out.push_str(b);
        }
    }
    out
}

fn report_csv(report: &ExtremalReport) -> String {
    let rows: Vec<CsvRow> = report
        .certificates
        .iter()
        .map(|c| CsvRow {
            code: c.code.to_string(),
            energy: c.energy,
            b: c.b.clone(),
        })
        .collect();
    csv_table(report.spec.order(), report.spec.total_weight(), &rows)
}

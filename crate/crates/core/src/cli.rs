// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! The `hitwalk` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 parse/invariant/I-O error,
//! 3 unreachable target, 4 comparison mismatch, 5 simulation truncated.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::closed_forms::{self, FormulaError};
use crate::family::{self, FamilyError, FamilySpec};
use crate::format::{self, FormatError};
use crate::graph::Graph;
use crate::monte_carlo::{self, WalkConfig, WalkError, DEFAULT_MAX_STEPS};
use crate::solver::{self, render_float, render_rational, Backend, HittingTime, SolveError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNREACHABLE: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;
pub const EXIT_TRUNCATED: i32 = 5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Formula(FormulaError),
    #[error(transparent)]
    Solve(SolveError),
    #[error(transparent)]
    Walk(WalkError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Formula(FormulaError::InvalidParameters(_)) => {
                EXIT_USAGE
            }
            CliError::Walk(WalkError::Unreachable { .. }) => EXIT_UNREACHABLE,
            CliError::Walk(WalkError::AllTruncated { .. }) => EXIT_TRUNCATED,
            CliError::Walk(WalkError::InvalidConfig) => EXIT_USAGE,
            _ => EXIT_INVALID,
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::Graph(g) => CliError::Format(g.into()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<FormulaError> for CliError {
    fn from(e: FormulaError) -> Self {
        CliError::Formula(e)
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        CliError::Solve(e)
    }
}

impl From<WalkError> for CliError {
    fn from(e: WalkError) -> Self {
        CliError::Walk(e)
    }
}

#[derive(Parser, Debug)]
#[command(name = "hitwalk", version, about = "Hitting times of random walks on graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a family graph in the edge list format.
    Generate {
        #[command(subcommand)]
        family: FamilyCmd,
        /// Output file; stdout when omitted.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Solve the absorbing system for one source/target pair.
    Solve {
        graph: PathBuf,
        #[arg(long)]
        source: usize,
        #[arg(long)]
        target: usize,
        #[arg(long, value_enum, default_value_t = BackendArg::Exact)]
        backend: BackendArg,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a closed-form hitting time.
    Formula {
        #[command(subcommand)]
        formula: FormulaCmd,
        #[arg(long, global = true)]
        json: bool,
    },
    /// Estimate a hitting (or return) time by simulation.
    Simulate {
        graph: PathBuf,
        #[arg(long)]
        source: usize,
        /// Target vertex; omit together with --return to time first returns.
        #[arg(long, required_unless_present = "return_time")]
        target: Option<usize>,
        /// Estimate the return time to --source instead.
        #[arg(long = "return", conflicts_with = "target")]
        return_time: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
        max_steps: u64,
        #[arg(long)]
        json: bool,
    },
    /// Check closed forms against the exact solver (and optionally simulation).
    Compare {
        #[command(subcommand)]
        family: FamilyCmd,
        #[command(flatten)]
        opts: CompareOpts,
    },
    /// Hitting times between every ordered pair of vertices.
    AllPairs {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = BackendArg::Exact)]
        backend: BackendArg,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
}

#[derive(Args, Debug, Clone)]
struct CompareOpts {
    /// For d-ary trees, check every ordered pair instead of the root/leaf paths.
    #[arg(long, global = true)]
    all_pairs: bool,
    /// Also simulate each pair with this many walks.
    #[arg(long, global = true)]
    mc_trials: Option<u64>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true)]
    json: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum BackendArg {
    Exact,
    Float,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Exact => Backend::Exact,
            BackendArg::Float => Backend::Float,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Subcommand, Debug, Clone)]
enum FamilyCmd {
    /// Path on n vertices.
    Path {
        #[arg(long)]
        n: usize,
    },
    /// Cycle on n vertices.
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// d-dimensional grid with side m.
    Grid {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: usize,
    },
    /// d-dimensional hypercube.
    Hypercube {
        #[arg(long)]
        d: u32,
    },
    /// Star with a center and the given number of leaves.
    Star {
        #[arg(long)]
        leaves: usize,
    },
    /// Complete d-ary tree of height h.
    Dary {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        h: u32,
    },
    /// k-cycle with an l-vertex tail.
    Tadpole {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Tree from a parent list such as "-,0,0,1" ('-' marks the root 0).
    Tree {
        #[arg(long, allow_hyphen_values = true)]
        parents: String,
    },
}

impl FamilyCmd {
    fn spec(&self) -> Result<FamilySpec, CliError> {
        Ok(match *self {
            FamilyCmd::Path { n } => FamilySpec::Path { n },
            FamilyCmd::Cycle { n } => FamilySpec::Cycle { n },
            FamilyCmd::Grid { d, m } => FamilySpec::Grid { d, m },
            FamilyCmd::Hypercube { d } => FamilySpec::Hypercube { d },
            FamilyCmd::Star { leaves } => FamilySpec::Star { leaves },
            FamilyCmd::Dary { d, h } => FamilySpec::CompleteDaryTree { d, h },
            FamilyCmd::Tadpole { k, l } => FamilySpec::Tadpole { k, l },
            FamilyCmd::Tree { ref parents } => FamilySpec::TreeFromParents {
                parents: parse_parents(parents)?,
            },
        })
    }

    fn echo(&self) -> Inputs {
        let mut inputs = Inputs::new();
        let mut put = |k: &str, v: String| {
            inputs.insert(k.to_string(), v);
        };
        match self {
            FamilyCmd::Path { n } | FamilyCmd::Cycle { n } => put("n", n.to_string()),
            FamilyCmd::Grid { d, m } => {
                put("d", d.to_string());
                put("m", m.to_string());
            }
            FamilyCmd::Hypercube { d } => put("d", d.to_string()),
            FamilyCmd::Star { leaves } => put("leaves", leaves.to_string()),
            FamilyCmd::Dary { d, h } => {
                put("d", d.to_string());
                put("h", h.to_string());
            }
            FamilyCmd::Tadpole { k, l } => {
                put("k", k.to_string());
                put("l", l.to_string());
            }
            FamilyCmd::Tree { parents } => put("parents", parents.clone()),
        }
        let family = match self {
            FamilyCmd::Path { .. } => "path",
            FamilyCmd::Cycle { .. } => "cycle",
            FamilyCmd::Grid { .. } => "grid",
            FamilyCmd::Hypercube { .. } => "hypercube",
            FamilyCmd::Star { .. } => "star",
            FamilyCmd::Dary { .. } => "dary",
            FamilyCmd::Tadpole { .. } => "tadpole",
            FamilyCmd::Tree { .. } => "tree",
        };
        inputs.insert("family".into(), family.into());
        inputs
    }
}

fn parse_parents(text: &str) -> Result<Vec<Option<usize>>, CliError> {
    text.split(',')
        .map(|field| match field.trim() {
            "-" => Ok(None),
            id => id
                .parse()
                .map(Some)
                .map_err(|_| CliError::Usage(format!("bad parent entry {id:?}"))),
        })
        .collect()
}

#[derive(Subcommand, Debug, Clone)]
enum FormulaCmd {
    /// 2e/k − 1 for a target of degree k with symmetric neighbors.
    Symmetric {
        #[arg(long)]
        e: u64,
        #[arg(long)]
        k: u64,
    },
    /// Neighbor of the corner to the corner of the d-dimensional m-grid.
    Grid {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: u64,
    },
    /// Between adjacent vertices of the d-cube.
    Hypercube {
        #[arg(long)]
        d: u32,
    },
    /// From v to its neighbor u in a tree read from a graph file.
    Tree {
        graph: PathBuf,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        u: usize,
    },
    /// From the tail end's neighbor to the tail end.
    TadpoleEnd {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// From vertex w to the tail end.
    Tadpole {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        w: usize,
    },
    /// The polynomial f_n(d).
    DaryF {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: usize,
    },
    /// The polynomial g_{k,m}(d).
    DaryG {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        d: usize,
    },
    /// From depth l to the root.
    DaryRoot {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        h: u32,
        #[arg(long)]
        l: u32,
    },
    /// From the ancestor l levels above a leaf to the leaf.
    DaryLeaf {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        h: u32,
        #[arg(long)]
        l: u32,
    },
    /// Between level-order ids u and v.
    Dary {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        h: u32,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
    },
}

pub type Inputs = BTreeMap<String, String>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Exact,
    Float,
    Montecarlo,
    Compare,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ReportValue {
    Exact {
        value: String,
    },
    Float {
        value: String,
    },
    Estimate {
        mean: String,
        std_error: String,
        trials_completed: u64,
        truncated: u64,
    },
    Unreachable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairCheck {
    pub source: usize,
    pub target: usize,
    pub formula: String,
    pub exact: String,
    pub equal: bool,
    pub mc_mean: Option<String>,
    pub mc_std_error: Option<String>,
    pub mc_z: Option<String>,
    pub mc_flagged: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Agreement {
    pub pairs: usize,
    pub mismatches: usize,
    pub mc_flagged: usize,
    pub checks: Vec<PairCheck>,
}

impl Agreement {
    /// Exit code for a compare run: simulation flags alone do not fail it.
    pub fn exit_code(&self) -> i32 {
        if self.mismatches == 0 {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        }
    }
}

/// Everything a subcommand reports, with enough inputs echoed to rerun it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub method: Method,
    pub inputs: Inputs,
    pub value: Option<ReportValue>,
    pub agreement: Option<Agreement>,
}

impl RunReport {
    fn text(&self) -> String {
        let mut out = String::new();
        if let Some(value) = &self.value {
            match value {
                ReportValue::Exact { value } | ReportValue::Float { value } => {
                    writeln!(out, "{value}").unwrap()
                }
                ReportValue::Estimate {
                    mean,
                    std_error,
                    trials_completed,
                    truncated,
                } => {
                    let echo: Vec<String> =
                        self.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    writeln!(
                        out,
                        "{} mean={mean} std_error={std_error} trials_completed={trials_completed} truncated={truncated}",
                        echo.join(" ")
                    )
                    .unwrap()
                }
                ReportValue::Unreachable => out.push_str("unreachable\n"),
            }
        }
        if let Some(agreement) = &self.agreement {
            let echo: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
            writeln!(out, "compare {}", echo.join(" ")).unwrap();
            for check in &agreement.checks {
                write!(
                    out,
                    "{} -> {} formula={} exact={} {}",
                    check.source,
                    check.target,
                    check.formula,
                    check.exact,
                    if check.equal { "ok" } else { "MISMATCH" }
                )
                .unwrap();
                if let (Some(mean), Some(z), Some(flagged)) =
                    (&check.mc_mean, &check.mc_z, check.mc_flagged)
                {
                    write!(out, " mc_mean={mean} z={z}{}", if flagged { " FLAG" } else { "" })
                        .unwrap();
                }
                out.push('\n');
            }
            writeln!(
                out,
                "pairs={} mismatches={} mc_flagged={}",
                agreement.pairs, agreement.mismatches, agreement.mc_flagged
            )
            .unwrap();
        }
        out
    }

    fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(self).expect("report serializes");
            s.push('\n');
            s
        } else {
            self.text()
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(format::parse_graph(&text)?)
}

fn check_id(g: &Graph, name: &str, id: usize) -> Result<(), CliError> {
    if id >= g.n() {
        return Err(CliError::Usage(format!(
            "--{name} {id} is out of range for a graph with {} vertices",
            g.n()
        )));
    }
    Ok(())
}

fn exact_value(value: &BigRational) -> ReportValue {
    ReportValue::Exact {
        value: render_rational(value),
    }
}

fn int_value(value: BigInt) -> ReportValue {
    ReportValue::Exact {
        value: value.to_string(),
    }
}

fn graph_inputs(path: &Path) -> Inputs {
    Inputs::from([("graph".to_string(), path.display().to_string())])
}

/// Outcome of a subcommand: what to print and the exit code.
struct Outcome {
    stdout: String,
    code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            code: EXIT_OK,
        }
    }
}

/// Parses `args` (program name first) and runs the command, writing normal
/// output to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.stdout.as_bytes());
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Generate { family, output } => {
            let g = family.spec()?.generate()?;
            let text = format::serialize_graph(&g);
            match output {
                Some(path) => {
                    fs::write(&path, text).map_err(|source| CliError::Io { path, source })?;
                    Ok(Outcome::ok(String::new()))
                }
                None => Ok(Outcome::ok(text)),
            }
        }
        Command::Solve {
            graph,
            source,
            target,
            backend,
            json,
        } => {
            let g = read_graph(&graph)?;
            check_id(&g, "source", source)?;
            check_id(&g, "target", target)?;
            let backend = Backend::from(backend);
            let mut inputs = graph_inputs(&graph);
            inputs.insert("source".into(), source.to_string());
            inputs.insert("target".into(), target.to_string());
            inputs.insert("backend".into(), backend.to_string());
            let (method, value) = match backend {
                Backend::Exact => (
                    Method::Exact,
                    match solver::hitting_time::<BigRational>(&g, source, target)? {
                        HittingTime::Finite(v) => exact_value(&v),
                        HittingTime::Unreachable => ReportValue::Unreachable,
                    },
                ),
                Backend::Float => (
                    Method::Float,
                    match solver::hitting_time::<f64>(&g, source, target)? {
                        HittingTime::Finite(v) => ReportValue::Float {
                            value: render_float(v),
                        },
                        HittingTime::Unreachable => ReportValue::Unreachable,
                    },
                ),
            };
            let code = if value == ReportValue::Unreachable {
                EXIT_UNREACHABLE
            } else {
                EXIT_OK
            };
            let report = RunReport {
                method,
                inputs,
                value: Some(value),
                agreement: None,
            };
            Ok(Outcome {
                stdout: report.render(json),
                code,
            })
        }
        Command::Formula { formula, json } => {
            let report = run_formula(&formula)?;
            Ok(Outcome::ok(report.render(json)))
        }
        Command::Simulate {
            graph,
            source,
            target,
            return_time,
            seed,
            trials,
            max_steps,
            json,
        } => {
            let g = read_graph(&graph)?;
            check_id(&g, "source", source)?;
            let cfg = WalkConfig {
                seed,
                trials,
                max_steps,
            };
            let mut inputs = graph_inputs(&graph);
            inputs.insert("source".into(), source.to_string());
            inputs.insert("seed".into(), seed.to_string());
            inputs.insert("trials".into(), trials.to_string());
            inputs.insert("max_steps".into(), max_steps.to_string());
            let estimate = match (target, return_time) {
                (Some(target), _) => {
                    check_id(&g, "target", target)?;
                    inputs.insert("target".into(), target.to_string());
                    monte_carlo::simulate_hitting_time(&g, source, target, &cfg)?
                }
                (None, _) => {
                    inputs.insert("return".into(), "true".into());
                    monte_carlo::simulate_return_time(&g, source, &cfg)?
                }
            };
            let report = RunReport {
                method: Method::Montecarlo,
                inputs,
                value: Some(ReportValue::Estimate {
                    mean: render_float(estimate.mean),
                    std_error: render_float(estimate.std_error),
                    trials_completed: estimate.trials_completed,
                    truncated: estimate.truncated,
                }),
                agreement: None,
            };
            Ok(Outcome {
                stdout: report.render(json),
                code: if estimate.is_valid() {
                    EXIT_OK
                } else {
                    EXIT_TRUNCATED
                },
            })
        }
        Command::Compare { family, opts } => {
            let report = run_compare(&family, &opts)?;
            let agreement = report.agreement.as_ref().expect("compare reports agreement");
            Ok(Outcome {
                stdout: report.render(opts.json),
                code: agreement.exit_code(),
            })
        }
        Command::AllPairs {
            graph,
            backend,
            format,
        } => {
            let g = read_graph(&graph)?;
            let backend = Backend::from(backend);
            let table = all_pairs_table(&g, backend)?;
            Ok(Outcome::ok(render_table(&table, g.n(), backend, format)))
        }
    }
}

fn run_formula(formula: &FormulaCmd) -> Result<RunReport, CliError> {
    use closed_forms::*;

    let mut inputs = Inputs::new();
    let mut put = |k: &str, v: &dyn ToString| {
        inputs.insert(k.to_string(), v.to_string());
    };
    let (name, value) = match formula {
        FormulaCmd::Symmetric { e, k } => {
            put("e", e);
            put("k", k);
            ("symmetric", exact_value(&symmetric_neighbor_ht(*e, *k)?))
        }
        FormulaCmd::Grid { d, m } => {
            put("d", d);
            put("m", m);
            ("grid", int_value(grid_corner_ht(*d, *m)?))
        }
        FormulaCmd::Hypercube { d } => {
            put("d", d);
            ("hypercube", int_value(hypercube_neighbor_ht(*d)?))
        }
        FormulaCmd::Tree { graph, v, u } => {
            put("graph", &graph.display());
            put("v", v);
            put("u", u);
            let g = read_graph(graph)?;
            ("tree", int_value(tree_neighbor_ht(&g, *v, *u)?))
        }
        FormulaCmd::TadpoleEnd { k, l } => {
            put("k", k);
            put("l", l);
            ("tadpole-end", int_value(tadpole_end_ht(*k, *l)?))
        }
        FormulaCmd::Tadpole { k, l, w } => {
            put("k", k);
            put("l", l);
            put("w", w);
            ("tadpole", int_value(tadpole_ht_to_end(*k, *l, *w)?))
        }
        FormulaCmd::DaryF { n, d } => {
            put("n", n);
            put("d", d);
            ("dary-f", int_value(dary_f(*n, *d)?))
        }
        FormulaCmd::DaryG { k, m, d } => {
            put("k", k);
            put("m", m);
            put("d", d);
            ("dary-g", int_value(dary_g(*k, *m, *d)?))
        }
        FormulaCmd::DaryRoot { d, h, l } => {
            put("d", d);
            put("h", h);
            put("l", l);
            ("dary-root", int_value(dary_to_root_ht(*d, *h, *l)?))
        }
        FormulaCmd::DaryLeaf { d, h, l } => {
            put("d", d);
            put("h", h);
            put("l", l);
            ("dary-leaf", int_value(dary_ancestor_to_leaf_ht(*d, *h, *l)?))
        }
        FormulaCmd::Dary { d, h, u, v } => {
            put("d", d);
            put("h", h);
            put("u", u);
            put("v", v);
            ("dary", int_value(dary_ht(*d, *h, *u, *v)?))
        }
    };
    inputs.insert("formula".into(), name.into());
    Ok(RunReport {
        method: Method::Formula,
        inputs,
        value: Some(value),
        agreement: None,
    })
}

/// Closed-form predictions for a family as `(source, target, value)`.
pub fn family_predictions(
    spec: &FamilySpec,
    g: &Graph,
    all_pairs: bool,
) -> Result<Vec<(usize, usize, BigRational)>, CliError> {
    use closed_forms::*;

    let int = BigRational::from_integer;
    let mut pairs = Vec::new();
    match *spec {
        FamilySpec::Grid { d, m } => {
            let value = int(grid_corner_ht(d, m as u64)?);
            pairs.extend(g.neighbors(0).iter().map(|&u| (u, 0, value.clone())));
        }
        FamilySpec::Hypercube { d } => {
            let value = int(hypercube_neighbor_ht(d)?);
            pairs.extend(g.neighbors(0).iter().map(|&u| (u, 0, value.clone())));
        }
        FamilySpec::Cycle { n } => {
            pairs.push((1, 0, symmetric_neighbor_ht(n as u64, 2)?));
        }
        FamilySpec::Path { .. } | FamilySpec::Star { .. } | FamilySpec::TreeFromParents { .. } => {
            for v in 0..g.n() {
                for &u in g.neighbors(v) {
                    pairs.push((v, u, int(tree_neighbor_ht(g, v, u)?)));
                }
            }
        }
        FamilySpec::Tadpole { k, l } => {
            let end = family::tadpole_end(k, l);
            for w in 0..g.n() {
                pairs.push((w, end, int(tadpole_ht_to_end(k, l, w)?)));
            }
        }
        FamilySpec::CompleteDaryTree { d, h } => {
            if all_pairs {
                for u in 0..g.n() {
                    for v in 0..g.n() {
                        pairs.push((u, v, int(dary_ht(d, h, u, v)?)));
                    }
                }
            } else {
                // leftmost root-to-leaf path: 0, 1, d + 1, ...
                let mut path = vec![0usize];
                for _ in 0..h {
                    path.push(path.last().unwrap() * d + 1);
                }
                let leaf = *path.last().unwrap();
                for (depth, &v) in path.iter().enumerate() {
                    let depth = depth as u32;
                    pairs.push((v, 0, int(dary_to_root_ht(d, h, depth)?)));
                    if h >= 1 {
                        pairs.push((v, leaf, int(dary_ancestor_to_leaf_ht(d, h, h - depth)?)));
                    }
                }
            }
        }
    }
    Ok(pairs)
}

fn run_compare(family: &FamilyCmd, opts: &CompareOpts) -> Result<RunReport, CliError> {
    let spec = family.spec()?;
    let g = spec.generate()?;
    let predictions = family_predictions(&spec, &g, opts.all_pairs)?;
    let agreement = check_predictions(&g, predictions, opts)?;

    let mut inputs = family.echo();
    inputs.insert("all_pairs".into(), opts.all_pairs.to_string());
    if let Some(trials) = opts.mc_trials {
        inputs.insert("mc_trials".into(), trials.to_string());
        inputs.insert("seed".into(), opts.seed.to_string());
    }
    Ok(RunReport {
        method: Method::Compare,
        inputs,
        value: None,
        agreement: Some(agreement),
    })
}

fn check_predictions(
    g: &Graph,
    predictions: Vec<(usize, usize, BigRational)>,
    opts: &CompareOpts,
) -> Result<Agreement, CliError> {
    let targets: BTreeSet<usize> = predictions.iter().map(|&(_, t, _)| t).collect();
    let mut solved = BTreeMap::new();
    for &t in &targets {
        solved.insert(t, solver::hitting_times_to::<BigRational>(g, t)?);
    }

    let mut checks = Vec::with_capacity(predictions.len());
    for (source, target, formula) in predictions {
        let exact = solved[&target].values[source]
            .finite()
            .cloned()
            .expect("family graphs are connected");
        let mut check = PairCheck {
            source,
            target,
            formula: render_rational(&formula),
            exact: render_rational(&exact),
            equal: formula == exact,
            mc_mean: None,
            mc_std_error: None,
            mc_z: None,
            mc_flagged: None,
        };
        if let Some(trials) = opts.mc_trials {
            let cfg = WalkConfig::new(opts.seed, trials);
            let est = monte_carlo::simulate_hitting_time(g, source, target, &cfg)?;
            let z = est.z_score(solver::ratio_to_f64(&exact));
            check.mc_mean = Some(render_float(est.mean));
            check.mc_std_error = Some(render_float(est.std_error));
            check.mc_z = Some(format!("{z:.3}"));
            check.mc_flagged = Some(z > 4.0 || !est.is_valid());
        }
        checks.push(check);
    }
    Ok(Agreement {
        pairs: checks.len(),
        mismatches: checks.iter().filter(|c| !c.equal).count(),
        mc_flagged: checks.iter().filter(|c| c.mc_flagged == Some(true)).count(),
        checks,
    })
}

/// Row = source, column = target; `None` for unreachable pairs.
fn all_pairs_table(g: &Graph, backend: Backend) -> Result<Vec<Vec<Option<String>>>, CliError> {
    fn transpose<T>(
        columns: Vec<solver::HittingVector<T>>,
        render: impl Fn(&T) -> String,
    ) -> Vec<Vec<Option<String>>> {
        let n = columns.len();
        (0..n)
            .map(|source| {
                columns
                    .iter()
                    .map(|col| col.values[source].finite().map(&render))
                    .collect()
            })
            .collect()
    }
    Ok(match backend {
        Backend::Exact => transpose(solver::all_pairs::<BigRational>(g)?, render_rational),
        Backend::Float => transpose(solver::all_pairs::<f64>(g)?, |v| render_float(*v)),
    })
}

fn render_table(
    table: &[Vec<Option<String>>],
    n: usize,
    backend: Backend,
    format: TableFormat,
) -> String {
    let header = format!("hitwalk all-pairs n={n}");
    match format {
        TableFormat::Csv => {
            let mut out = format!("{header}\n");
            for row in table {
                let cells: Vec<String> = row
                    .iter()
                    .map(|cell| match cell {
                        Some(v) if v.contains('/') => format!("\"{v}\""),
                        Some(v) => v.clone(),
                        None => "inf".to_string(),
                    })
                    .collect();
                writeln!(out, "{}", cells.join(",")).unwrap();
            }
            out
        }
        TableFormat::Json => {
            #[derive(Serialize)]
            struct Table<'a> {
                header: String,
                n: usize,
                backend: String,
                matrix: Vec<Vec<&'a str>>,
            }
            let matrix = table
                .iter()
                .map(|row| row.iter().map(|c| c.as_deref().unwrap_or("inf")).collect())
                .collect();
            let mut s = serde_json::to_string_pretty(&Table {
                header,
                n,
                backend: backend.to_string(),
                matrix,
            })
            .expect("table serializes");
            s.push('\n');
            s
        }
    }
}

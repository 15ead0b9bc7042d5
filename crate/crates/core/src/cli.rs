//! Command-line front end.
//!
//! Exit codes: 0 success, 2 bad input, 3 solver cap or timeout, 4 a
//! constructed labeling failed verification.

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{self, edge_corona, read_edge_list, to_dot, write_edge_list, Family, Graph};
use crate::iasi::{verify, VertexLabeling};
use crate::labeler::{construct_optimal, construct_weak_iasi, LabelerError};
use crate::sparing::audit::{check_theorem, AuditRanges};
use crate::sparing::{
    sparing_bruteforce, sparing_exact, MonoPattern, SolveError, SolverConfig, TheoremId,
    DEFAULT_BRUTEFORCE_CAP,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Resource(String),
    #[error("{0}")]
    Verification(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Verification(_) => 4,
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::CapExceeded { .. } | SolveError::Timeout(_) => {
                CliError::Resource(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<LabelerError> for CliError {
    fn from(e: LabelerError) -> Self {
        match e {
            LabelerError::Solve(s) => s.into(),
            LabelerError::Label(l) => CliError::Input(l.to_string()),
            other => CliError::Verification(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "weak-iasi",
    version,
    about = "Sparing numbers, edge coronas and weak IASI labelings"
)]
pub struct Cli {
    /// Print human-readable tables on standard error.
    #[arg(long, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Exact,
    Bruteforce,
}

#[derive(Debug, Clone, clap::Args)]
pub struct SolverArgs {
    /// Vertex cap for brute-force enumeration.
    #[arg(long, default_value_t = DEFAULT_BRUTEFORCE_CAP)]
    pub cap: usize,
    /// Per-instance time limit in seconds.
    #[arg(long, default_value_t = 30.0)]
    pub timeout_secs: f64,
}

impl SolverArgs {
    fn config(&self) -> Result<SolverConfig, CliError> {
        let timeout = Duration::try_from_secs_f64(self.timeout_secs).map_err(|_| {
            CliError::Input(format!("invalid --timeout-secs {}", self.timeout_secs))
        })?;
        Ok(SolverConfig {
            cap: self.cap,
            timeout: Some(timeout),
        })
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph of a standard family as an edge list.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Vertex count (first part size for complete-bipartite).
        #[arg(long)]
        n: usize,
        /// Second part size for complete-bipartite.
        #[arg(long)]
        b: Option<usize>,
        /// Edge probability for random graphs.
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the edge corona of two graphs.
    Corona {
        #[arg(long)]
        g1: PathBuf,
        #[arg(long)]
        g2: PathBuf,
        /// Edge list output (standard output if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Provenance JSON output.
        #[arg(long)]
        provenance: Option<PathBuf>,
    },
    /// Compute the sparing number of a graph.
    Sparing {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Exact)]
        method: MethodArg,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Construct a verified weak IASI, optimal or for a given pattern.
    Label {
        #[arg(long)]
        graph: PathBuf,
        /// JSON array of non-mono-indexed vertex ids.
        #[arg(long)]
        pattern: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Check a labeling against the weak IASI conditions.
    VerifyLabeling {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        labeling: PathBuf,
    },
    /// Compare a published formula with exact values.
    CheckTheorems {
        /// Registry id, or ALL.
        #[arg(long)]
        id: String,
        /// Range such as 2..5 (inclusive) or a single value.
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        n: Option<String>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Graphviz export, optionally showing a labeling.
    ExportDot {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        labeling: Option<PathBuf>,
    },
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    read_edge_list(&read_text(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_labeling(path: &Path) -> Result<VertexLabeling, CliError> {
    VertexLabeling::from_json(&read_text(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("valid json");
    s.push('\n');
    s
}

/// Parses `a..b` (inclusive) or `a`.
pub fn parse_range(text: &str) -> Result<RangeInclusive<usize>, CliError> {
    let bad = || {
        CliError::Input(format!(
            "invalid range {text:?}; expected a..b or a single integer"
        ))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim().trim_start_matches('=')),
        None => (text.trim(), text.trim()),
    };
    let lo: usize = lo.parse().map_err(|_| bad())?;
    let hi: usize = hi.parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Gen {
            family,
            n,
            b,
            p,
            seed,
            out,
        } => {
            let g = match family {
                FamilyArg::Random => {
                    if !(0.0..=1.0).contains(p) {
                        return Err(CliError::Input(format!("--p must be in [0, 1], got {p}")));
                    }
                    graph::random_gnp(*n, *p, &mut ChaCha8Rng::seed_from_u64(*seed))
                }
                other => {
                    let f = match other {
                        FamilyArg::Path => Family::Path(*n),
                        FamilyArg::Cycle => Family::Cycle(*n),
                        FamilyArg::Complete => Family::Complete(*n),
                        FamilyArg::CompleteBipartite => {
                            let b = b.ok_or_else(|| {
                                CliError::Input("complete-bipartite needs --b".into())
                            })?;
                            Family::CompleteBipartite(*n, b)
                        }
                        FamilyArg::Random => unreachable!(),
                    };
                    graph::generate(f).map_err(|e| CliError::Input(e.to_string()))?
                }
            };
            emit(stdout, out.as_deref(), &write_edge_list(&g))
        }
        Command::Corona {
            g1,
            g2,
            out,
            provenance,
        } => {
            let (g, prov) = edge_corona(&read_graph(g1)?, &read_graph(g2)?);
            emit(stdout, out.as_deref(), &write_edge_list(&g))?;
            if let Some(path) = provenance {
                fs::write(
                    path,
                    pretty(&serde_json::to_value(&prov).expect("serializable")),
                )?;
            }
            if cli.verbose {
                writeln!(
                    stderr,
                    "corona: {} vertices, {} edges",
                    g.vertex_count(),
                    g.edge_count()
                )?;
            }
            Ok(())
        }
        Command::Sparing {
            graph,
            method,
            solver,
        } => {
            let g = read_graph(graph)?;
            let config = solver.config()?;
            let result = match method {
                MethodArg::Exact => sparing_exact(&g, &config)?,
                MethodArg::Bruteforce => sparing_bruteforce(&g, &config)?,
            };
            if cli.verbose {
                writeln!(
                    stderr,
                    "sparing number {} ({:?}, {} explored, {:?})",
                    result.value, result.method, result.explored, result.elapsed
                )?;
            }
            emit(stdout, None, &pretty(&result.to_json()))
        }
        Command::Label {
            graph,
            pattern,
            out,
            solver,
        } => {
            let g = read_graph(graph)?;
            let f = match pattern {
                Some(path) => {
                    let ids: Vec<usize> = serde_json::from_str(&read_text(path)?)
                        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
                    construct_weak_iasi(&g, &MonoPattern::new(ids))?
                }
                None => construct_optimal(&g, &solver.config()?)?.1,
            };
            let verdict = verify(&g, &f).map_err(|e| CliError::Verification(e.to_string()))?;
            if !verdict.is_weak_iasi() {
                return Err(CliError::Verification(format!(
                    "labeling failed verification: {verdict:?}"
                )));
            }
            if cli.verbose {
                writeln!(stderr, "mono-indexed edges: {}", verdict.mono_edge_count)?;
            }
            emit(stdout, out.as_deref(), &pretty(&f.to_json()))
        }
        Command::VerifyLabeling { graph, labeling } => {
            let g = read_graph(graph)?;
            let f = read_labeling(labeling)?;
            let verdict = verify(&g, &f).map_err(|e| CliError::Input(e.to_string()))?;
            let mut json = serde_json::to_value(&verdict).expect("serializable");
            json["is_weak_iasi"] = verdict.is_weak_iasi().into();
            emit(stdout, None, &pretty(&json))
        }
        Command::CheckTheorems { id, m, n, solver } => {
            let ids: Vec<TheoremId> = if id.eq_ignore_ascii_case("all") {
                TheoremId::ALL.to_vec()
            } else {
                vec![id
                    .parse()
                    .map_err(|e: crate::sparing::FormulaError| CliError::Input(e.to_string()))?]
            };
            let config = solver.config()?;
            let mut reports = Vec::new();
            for id in ids {
                let mut ranges = AuditRanges::default_for(id);
                if let Some(m) = m {
                    ranges.m = parse_range(m)?;
                }
                if let Some(n) = n {
                    ranges.n = parse_range(n)?;
                }
                let report = check_theorem(id, &ranges, &config);
                if cli.verbose {
                    write!(stderr, "{}", report.to_table())?;
                }
                reports.push(report);
            }
            let unresolved: usize = reports.iter().map(|r| r.summary.unresolved).sum();
            let json = if reports.len() == 1 {
                serde_json::to_value(&reports[0])
            } else {
                serde_json::to_value(&reports)
            }
            .expect("serializable");
            emit(stdout, None, &pretty(&json))?;
            if unresolved > 0 {
                return Err(CliError::Resource(format!(
                    "{unresolved} row(s) unresolved"
                )));
            }
            Ok(())
        }
        Command::ExportDot { graph, labeling } => {
            let g = read_graph(graph)?;
            let f = labeling.as_deref().map(read_labeling).transpose()?;
            emit(stdout, None, &to_dot(&g, f.as_ref()))
        }
    }
}

/// Parses arguments, runs, reports errors on standard error and returns
/// the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    match run(&cli, &mut stdout.lock(), &mut stderr.lock()) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

//! Command-line front end: argument parsing, dispatch and exit codes.
//!
//! Exit codes: 0 success (or the property holds), 1 the property was
//! refuted and the report carries the counterexample, 2 usage or input
//! error.

mod commands;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use report::{EmbeddedWitness, GraphSource, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "pidecomp", version, about = "Vertex-partition decompositions of graphs: build, verify, compose and mine them")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a graph from a named family as an edge list.
    Gen(GenArgs),
    /// Build a decomposition of a graph.
    Decompose(DecomposeArgs),
    /// Check every union of p parts against a hereditary property.
    Verify(VerifyArgs),
    /// Compose an outer decomposition with decompositions of its p-unions.
    Compose(ComposeArgs),
    /// Common refinement of two decompositions.
    Intersect(IntersectArgs),
    /// Search for half-graphs, shattered sets or bicliques.
    Mine(MineArgs),
    /// Kővári–Sós–Turán upper bound on K_{s,t}-free edge counts.
    Kst(KstArgs),
    /// Maximum independent set, exactly or by the shifting strategy.
    Mis(MisArgs),
    /// Seeded sweeps over random partitions.
    Experiment(ExperimentArgs),
    /// Re-validate every witness embedded in a report.
    Revalidate(RevalidateArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
#[value(rename_all = "snake_case")]
pub enum Family {
    Complete,
    Biclique,
    #[value(alias = "half-graph")]
    HalfGraph,
    Path,
    Cycle,
    Grid,
    #[value(alias = "random-regular")]
    RandomRegular,
    Gnp,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Vertex count (order for half_graph).
    #[arg(long)]
    pub n: Option<usize>,
    /// First side of a biclique.
    #[arg(long)]
    pub s: Option<usize>,
    /// Second side of a biclique.
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub rows: Option<usize>,
    #[arg(long)]
    pub cols: Option<usize>,
    /// Degree for random_regular.
    #[arg(long)]
    pub d: Option<usize>,
    /// Edge probability for gnp.
    #[arg(long)]
    pub prob: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the edge list here; without it the edge list goes to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// BFS layers from --root grouped modulo --d.
    Baker,
    /// Greedy coloring of the p-th power.
    PowerColoring,
    /// Load a decomposition document.
    FromFile,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_enum)]
    pub strategy: Strategy,
    #[arg(long, default_value_t = 2)]
    pub p: usize,
    #[arg(long, default_value_t = 0)]
    pub root: usize,
    /// Layer classes for the baker strategy.
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    /// Decomposition document for the from-file strategy.
    #[arg(long)]
    pub decomp: Option<PathBuf>,
    /// Write the decomposition document here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub decomp: PathBuf,
    /// `name:k1,k2`, e.g. `treedepth_le:2` or `excludes_induced:pattern.txt`.
    #[arg(long)]
    pub checker: String,
    /// Also write the report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ComposeArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub outer: PathBuf,
    /// JSON list of `{"subset": [i, j], "parts": [[v, ...], ...]}` in
    /// original vertex indices, one entry per p-subset of outer parts.
    #[arg(long, conflicts_with = "inner_random", required_unless_present = "inner_random")]
    pub inner: Option<PathBuf>,
    /// Draw every inner decomposition at random with at most this many parts.
    #[arg(long)]
    pub inner_random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Verify the composed decomposition with this checker.
    #[arg(long)]
    pub checker: Option<String>,
    /// Write the composed decomposition document here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct IntersectArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub first: PathBuf,
    #[arg(long)]
    pub second: PathBuf,
    /// Verify the refinement with each of these checkers.
    #[arg(long)]
    pub checker: Vec<String>,
    /// Write the refined decomposition document here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    HalfGraph,
    Vc,
    Biclique,
}

#[derive(Args, Debug)]
pub struct MineArgs {
    #[arg(value_enum)]
    pub pattern: Pattern,
    #[arg(long)]
    pub graph: PathBuf,
    /// Exact-search limit: vertices in the ladder (half-graph) or set size (vc).
    #[arg(long)]
    pub limit: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub s: usize,
    #[arg(long, default_value_t = 2)]
    pub t: usize,
    /// Also write the report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct KstArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub s: u32,
    #[arg(long)]
    pub t: u32,
    /// Also write the report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MisMode {
    Exact,
    Baker,
}

#[derive(Args, Debug)]
pub struct MisArgs {
    #[arg(value_enum)]
    pub mode: MisMode,
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub root: usize,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    /// Largest connected component solved exactly.
    #[arg(long, default_value_t = pidecomp::baker::DEFAULT_MIS_LIMIT)]
    pub limit: usize,
    /// Also write the report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExperimentKind {
    WeaklySparse,
    HalfGraphPigeonhole,
    Composition,
}

#[derive(Args, Debug)]
pub struct ExperimentArgs {
    #[arg(value_enum)]
    pub kind: ExperimentKind,
    /// Side of K_{n,n} (weakly-sparse).
    #[arg(long, default_value_t = 64)]
    pub n: usize,
    /// Half-graph order (half-graph-pigeonhole).
    #[arg(long, default_value_t = 30)]
    pub m: usize,
    /// Parts per random partition; 2 for weakly-sparse, 3 for
    /// half-graph-pigeonhole.
    #[arg(long)]
    pub parts: Option<usize>,
    /// Number of trials; 100, or 200 for composition.
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also write the report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct RevalidateArgs {
    #[arg(long)]
    pub report: PathBuf,
}

/// What a command produced: its exit code and either a report or raw text
/// (the edge list of `gen` without `--out`).
pub(crate) enum Output {
    Report {
        code: i32,
        report: Box<Report>,
        /// Also write the finished report to this path.
        out: Option<PathBuf>,
    },
    Text(String),
}

/// Runs one command line (program name first) and returns the exit code
/// with everything meant for standard output.
pub fn dispatch<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    let echo: Vec<String> = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let start = Instant::now();
    match commands::run(cli.command, echo) {
        Ok(Output::Text(text)) => (EXIT_OK, text),
        Ok(Output::Report { code, mut report, out }) => {
            report.elapsed_ms = start.elapsed().as_millis() as u64;
            let text = format!(
                "{}\n",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
            if let Some(path) = out {
                if let Err(e) = std::fs::write(&path, &text) {
                    return (EXIT_INPUT, format!("error: {}: {e}\n", path.display()));
                }
            }
            (code, text)
        }
        Err(message) => (EXIT_INPUT, format!("error: {message}\n")),
    }
}

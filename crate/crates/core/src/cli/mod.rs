//! The `etabound` command line: exact values, certified bounds, class
//! checks, graph generation and batch experiments.
//!
//! Exit codes: 0 success, 1 a hitting set failed verification, 2 bad input
//! or a graph outside the requested class, 3 a resource cap was hit. When
//! several graphs fail, the largest code wins.

mod commands;
pub mod experiment;
mod input;

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::graph::graph6::Graph6Error;

pub use experiment::{Manifest, Report, ReportRow, RunOptions, SummaryRow};
pub use input::{read_graphs, InputFormat};

/// Environment variable for the default number of worker threads.
pub const THREADS_ENV: &str = "ETABOUND_THREADS";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub enum Exit {
    #[default]
    Ok = 0,
    Unverified = 1,
    Input = 2,
    Cap = 3,
}

impl Exit {
    pub fn code(self) -> u8 {
        self as u8
    }
}

/// The exit status an error maps to.
pub fn exit_for(err: &Error) -> Exit {
    match err {
        Error::CapExceeded { .. }
        | Error::OrderCapExceeded { .. }
        | Error::ColourLimitExceeded { .. }
        | Error::TooManyVertices(_)
        | Error::Graph6(Graph6Error::TooLarge(_)) => Exit::Cap,
        Error::NotHitting { .. } | Error::BudgetExceeded { .. } | Error::Assertion { .. } => Exit::Unverified,
        _ => Exit::Input,
    }
}

#[derive(Debug, Parser)]
#[command(name = "etabound", version, about = "Hitting sets for maximum stable sets in hereditary graph classes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print alpha and omega, and with --exact the minimum hitting set, per graph.
    Eta(EtaArgs),
    /// Construct and verify a class-specific hitting set per graph.
    Bound(BoundArgs),
    /// Report induced-subgraph freeness and perfection per graph.
    Check(CheckArgs),
    /// Write generated graphs as graph6 lines.
    Gen(GenArgs),
    /// Run every route of a manifest on every generated graph.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file; standard input when absent or `-`.
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
    pub format: InputFormat,
}

#[derive(Debug, Args)]
pub struct EtaArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Also compute eta and a minimum hitting set.
    #[arg(long)]
    pub exact: bool,
    /// Largest number of maximum stable sets to enumerate.
    #[arg(long, default_value_t = crate::oracle::DEFAULT_ENUMERATION_CAP)]
    pub cap: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// p5, star:S, sst:S,T, ft:T, lt:T, perfect or proper-p5:H.
    #[arg(long)]
    pub class: crate::bounders::ClassSpec,
    /// Skip the up-front membership check.
    #[arg(long)]
    pub no_check: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Forbidden induced subgraphs: P5, K1,3, S2,1, F1, L1, 2K2, g6:..., and so on.
    #[arg(long = "free", value_name = "PATTERN", num_args = 1..)]
    pub free: Vec<crate::graph::pattern::Pattern>,
    /// Test perfection through alpha * omega >= |V(H)| for all induced H.
    #[arg(long)]
    pub perfect: bool,
    /// Largest order the perfection test accepts.
    #[arg(long, default_value_t = crate::oracle::DEFAULT_PERFECTION_CAP)]
    pub cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum GenKind {
    Gnp,
    HFree,
    Split,
    Cograph,
    Exhaustive,
    LineGraph,
    CoBipartite,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: GenKind,
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge probability as a decimal or a fraction `a/b`.
    #[arg(long)]
    pub p: Option<crate::generators::Probability>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    /// Forbidden pattern for h_free.
    #[arg(long)]
    pub pattern: Option<String>,
    #[arg(long, default_value_t = 1000)]
    pub max_tries: usize,
    #[arg(long)]
    pub clique: Option<usize>,
    #[arg(long)]
    pub stable: Option<usize>,
    /// Sides of a co-bipartite graph.
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    /// Smallest order for exhaustive enumeration; defaults to --n.
    #[arg(long)]
    pub from: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    /// JSON manifest.
    pub manifest: PathBuf,
    /// CSV destination, overriding the manifest.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// JSON destination, overriding the manifest.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Omit the timestamp header and wall times so reruns are byte-identical.
    #[arg(long)]
    pub reproducible: bool,
    /// Skip the independent re-verification of each hitting set.
    #[arg(long)]
    pub allow_unverified: bool,
    /// Worker threads, overriding the manifest.
    #[arg(long, env = THREADS_ENV)]
    pub threads: Option<usize>,
}

/// Parses `std::env::args` and runs against the process streams.
pub fn run() -> u8 {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(std::env::args_os(), &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs one invocation against the given streams and returns the exit code.
pub fn run_with<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { Exit::Input.code() } else { Exit::Ok.code() };
        }
    };
    let mut ctx = commands::Context { stdin, out, err, exit: Exit::Ok };
    if let Err(e) = commands::dispatch(&cli.command, &mut ctx) {
        let _ = writeln!(ctx.err, "error: {e}");
        ctx.raise(exit_for(&e));
    }
    if let Err(e) = ctx.out.flush() {
        let _ = writeln!(ctx.err, "error: {e}");
        ctx.raise(Exit::Input);
    }
    ctx.exit.code()
}

//! Command-line front end: file formats, instance generators, solver
//! commands and the solver-versus-oracle verification harness.

pub mod commands;
pub mod error;
pub mod formats;
pub mod record;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use horizon_core::rational::parse_rational;
use horizon_core::Rational;

pub use error::{CliError, CliResult};
pub use record::ResultRecord;

/// Environment variable holding the worker thread count.
pub const WORKERS_ENV: &str = "HORIZON_WORKERS";

#[derive(Debug, Parser)]
#[command(
    name = "horizon",
    version,
    about = "Exact planning under fixed, specified and adversarial stopping times"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Best utility of a path with exactly `--horizon` edges.
    Fixed(FixedArgs),
    /// Best expected utility under a stopping distribution file.
    Specified(SpecifiedArgs),
    /// Worst-case value over distributions with a given expected time.
    Adversarial(AdversarialArgs),
    /// Emit an instance as a graph file.
    Gen(GenArgs),
    /// Compare solvers against brute-force oracles on a random corpus.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Bellman,
    Maxplus,
    /// Run both and fail on disagreement.
    Both,
}

#[derive(Debug, Args)]
pub struct FixedArgs {
    pub graph: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub start: usize,
    #[arg(long)]
    pub horizon: u64,
    #[arg(long, value_enum, default_value_t = Method::Bellman)]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct SpecifiedArgs {
    pub graph: PathBuf,
    pub distribution: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub start: usize,
    /// Largest support time for which a witness path is emitted.
    #[arg(long, default_value_t = horizon_core::DEFAULT_WITNESS_BOUND)]
    pub witness_bound: u64,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("`{s}` is not an integer or p/q"))
}

#[derive(Debug, Args)]
pub struct AdversarialArgs {
    pub graph: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub start: usize,
    #[arg(long, value_parser = rational_arg)]
    pub expected_horizon: Rational,
    /// Only test whether the value is at least this threshold.
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub decide_only: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(subcommand)]
    pub kind: GenKind,
    /// Write the graph here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Cycle of length n through v0 with an exit to a losing sink.
    Fig1 {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Three zero loops through v0 with an exit to a losing sink.
    Fig2 {
        #[arg(long, value_delimiter = ',', num_args = 3, default_values_t = horizon_core::instances::FIG2_DEFAULT_LOOPS)]
        loops: Vec<usize>,
    },
    /// Stationary-plan hardness gadget around a base graph file.
    NpGadget {
        base: PathBuf,
        #[arg(long, default_value_t = 0)]
        v1: usize,
        #[arg(long, default_value_t = 1)]
        v2: usize,
        /// Where to write the start, horizon and threshold record
        /// (standard error if absent).
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// Seeded random total graph.
    Random {
        #[arg(long)]
        vertices: usize,
        #[arg(long, default_value_t = 10)]
        max_weight: i64,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 50)]
    pub corpus_size: usize,
    #[arg(long, default_value_t = 4)]
    pub max_vertices: usize,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, default_value_t = 5)]
    pub max_weight: i64,
    /// Feed the solvers a copy of each graph with one weight off by one.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

/// Sizes the global thread pool from `HORIZON_WORKERS` when set.
pub fn configure_workers() -> CliResult<()> {
    let Ok(raw) = std::env::var(WORKERS_ENV) else {
        return Ok(());
    };
    let workers: usize =
        raw.trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Invalid {
                origin: WORKERS_ENV.into(),
                message: format!("`{raw}` is not a positive integer"),
            })?;
    // Fails only if a pool already exists, which is harmless.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build_global();
    Ok(())
}

/// Runs one parsed command, writing its record to `out`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    configure_workers()?;
    match cli.command {
        Command::Fixed(a) => commands::fixed(&a, out),
        Command::Specified(a) => commands::specified(&a, out),
        Command::Adversarial(a) => commands::adversarial(&a, out),
        Command::Gen(a) => commands::gen(&a, out, err),
        Command::Verify(a) => verify::verify(&a, out),
    }
}

/// Parses `args` and runs; returns the process exit code.
pub fn main_with(args: impl IntoIterator<Item = impl Into<OsString> + Clone>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    match run(cli, &mut stdout.lock(), &mut stderr.lock()) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

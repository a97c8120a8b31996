//! Command-line front end: instance generation, evaluation, exact and
//! evolutionary solving, confidence-level sweeps and multi-run experiments.

mod commands;
mod error;
mod output;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rfqmst::ConfidenceLevels;

pub use commands::load_instance;
pub use error::CliError;

#[derive(Debug, Clone, Parser)]
#[command(
    name = "rfqmst",
    version,
    about = "Bi-objective rough-fuzzy quadratic minimum spanning tree"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Write a random connected instance QMST_n_m
    Gen(GenArgs),
    /// Evaluate one spanning tree
    Eval(EvalArgs),
    /// Exact Pareto front by enumeration, with an epsilon-constraint sweep
    Exact(ExactArgs),
    /// Run NSGA-II or MOCHC several times and score the fronts
    Solve(SolveArgs),
    /// Exact fronts over a grid of confidence levels
    Sensitivity(SensitivityArgs),
    /// Multi-instance, multi-run indicator statistics
    Experiment(ExperimentArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Nsga2,
    Mochc,
}

impl Algorithm {
    pub fn id(self) -> &'static str {
        match self {
            Algorithm::Nsga2 => "nsga2",
            Algorithm::Mochc => "mochc",
        }
    }

    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "nsga2" | "nsga-ii" => Ok(Algorithm::Nsga2),
            "mochc" => Ok(Algorithm::Mochc),
            other => Err(CliError::Config(format!("unknown algorithm `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct InstanceArg {
    /// Instance file, `paper` for the built-in graph, or `QMST_<n>_<m>[:seed]`
    #[arg(long, default_value = "paper")]
    pub instance: String,
}

/// Trust (`alpha`) and credibility (`beta`) levels; the shorthand sets both
/// objectives, the numbered forms override one.
#[derive(Debug, Clone, Args)]
pub struct LevelArgs {
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub alpha1: Option<f64>,
    #[arg(long)]
    pub alpha2: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub beta1: Option<f64>,
    #[arg(long)]
    pub beta2: Option<f64>,
}

pub const DEFAULT_ALPHA: f64 = 0.9;
pub const DEFAULT_BETA: f64 = 0.4;

impl LevelArgs {
    pub fn resolve(&self) -> Result<ConfidenceLevels<f64>, CliError> {
        let a = self.alpha.unwrap_or(DEFAULT_ALPHA);
        let b = self.beta.unwrap_or(DEFAULT_BETA);
        ConfidenceLevels::new(
            self.alpha1.unwrap_or(a),
            self.alpha2.unwrap_or(a),
            self.beta1.unwrap_or(b),
            self.beta2.unwrap_or(b),
        )
        .map_err(|e| CliError::Config(e.to_string()))
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output file or directory, depending on the command; stdout if absent
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// Base seed; run i uses seed + i
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Evaluation budget per run
    #[arg(long, default_value_t = 50_000)]
    pub evals: usize,
    /// Population size
    #[arg(long, default_value_t = 100)]
    pub pop: usize,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    /// Vertex count
    pub n: usize,
    /// Edge count
    pub m: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Output file; stdout if absent
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub instance: InstanceArg,
    #[command(flatten)]
    pub levels: LevelArgs,
    /// Bit string in edge order, or comma-separated edges as labels (`e12`)
    /// or 1-based vertex pairs (`1-2`)
    #[arg(long)]
    pub tree: String,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct ExactArgs {
    #[command(flatten)]
    pub instance: InstanceArg,
    #[command(flatten)]
    pub levels: LevelArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Skip the epsilon-constraint sweep
    #[arg(long)]
    pub no_sweep: bool,
    /// Also list every tree sharing a front point
    #[arg(long)]
    pub ties: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[arg(value_enum)]
    pub algorithm: Algorithm,
    #[command(flatten)]
    pub instance: InstanceArg,
    #[command(flatten)]
    pub levels: LevelArgs,
    #[command(flatten)]
    pub search: SearchArgs,
    #[arg(long, default_value_t = 1)]
    pub runs: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SensitivityArgs {
    #[command(flatten)]
    pub instance: InstanceArg,
    /// Credibility levels, comma separated
    #[arg(long, value_delimiter = ',', default_values_t = [0.1, 0.3, 0.5, 0.7, 0.9])]
    pub betas: Vec<f64>,
    /// Trust levels, comma separated
    #[arg(long, value_delimiter = ',', default_values_t = [0.2, 0.4, 0.6, 0.8])]
    pub alphas: Vec<f64>,
    /// CSV with columns `beta,alpha,f1,f2` to check for achievability
    #[arg(long)]
    pub expected: Option<PathBuf>,
    /// Absolute tolerance for matching expected points
    #[arg(long, default_value_t = 1e-2)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ExperimentArgs {
    /// Instances, comma separated (files, `paper`, or `QMST_<n>_<m>[:seed]`)
    #[arg(
        long,
        value_delimiter = ',',
        default_values_t = ["QMST_10_30", "QMST_20_70", "QMST_30_120", "QMST_40_170", "QMST_50_220"].map(String::from)
    )]
    pub instances: Vec<String>,
    /// Algorithms, comma separated
    #[arg(long, value_delimiter = ',', default_values_t = ["nsga2", "mochc"].map(String::from))]
    pub algorithms: Vec<String>,
    /// Level regimes as `alpha:beta`, comma separated
    #[arg(long, value_delimiter = ',', default_values_t = ["0.9:0.4", "0.9:0.8"].map(String::from))]
    pub regimes: Vec<String>,
    #[command(flatten)]
    pub search: SearchArgs,
    #[arg(long, default_value_t = 100)]
    pub runs: usize,
    /// Output directory
    #[arg(long)]
    pub out: PathBuf,
}

/// Executes a parsed command, writing human-facing output to `stdout`.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Gen(a) => commands::gen(a, stdout),
        Command::Eval(a) => commands::eval(a, stdout),
        Command::Exact(a) => commands::exact(a, stdout),
        Command::Solve(a) => commands::solve(a, stdout),
        Command::Sensitivity(a) => commands::sensitivity(a, stdout),
        Command::Experiment(a) => commands::experiment(a, stdout),
    }
}

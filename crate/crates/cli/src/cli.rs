use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::input::TRange;

#[derive(Debug, Parser)]
#[command(
    name = "trexp",
    version,
    about = "Trace exponentials of 2x2 Hermitian pairs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduce a Hermitian pair (A, B) to canonical form.
    Reduce(ReduceArgs),
    /// Build the word measure for finite n or its limit.
    #[command(subcommand)]
    Measure(MeasureCommand),
    /// Run a numerical verification and emit a report.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Tabulate f, e1 and e2 over a t-range as CSV.
    Sample(SampleArgs),
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(long, value_name = "FILE")]
    pub matrix_a: PathBuf,
    #[arg(long, value_name = "FILE")]
    pub matrix_b: PathBuf,
    /// Write the decomposition here instead of stdout.
    #[arg(long, value_name = "OUT")]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum MeasureCommand {
    /// Discrete measure for n letters.
    Approx(ApproxArgs),
    /// Limiting measure: atom at 1 plus a density on [-1, 1].
    Exact(ExactArgs),
}

#[derive(Debug, Args)]
pub struct ApproxArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long, value_name = "OUT")]
    pub json: Option<PathBuf>,
    /// Also write the atom table as CSV.
    #[arg(long, value_name = "OUT")]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long, default_value_t = 1001)]
    pub grid_points: usize,
    #[arg(long, value_name = "OUT")]
    pub json: Option<PathBuf>,
    /// Also write the density table as CSV.
    #[arg(long, value_name = "OUT")]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Lie-product error table and its first-order decay.
    Convergence(ConvergenceArgs),
    /// Laplace transform of the limiting measure against e1, e2 and f.
    Representation(RepresentationArgs),
    /// Gram-matrix certificate for t -> tr(e^{tA + B} + e^{tA - B}).
    Convexity(ConvexityArgs),
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "OUT")]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConvergenceArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub t: f64,
    #[arg(long, value_delimiter = ',', required = true)]
    pub n_list: Vec<usize>,
    #[command(flatten)]
    pub out: ReportArgs,
}

#[derive(Debug, Args)]
pub struct RepresentationArgs {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    /// `lo:hi:count`.
    #[arg(long, allow_hyphen_values = true)]
    pub t_range: TRange,
    #[command(flatten)]
    pub out: ReportArgs,
}

#[derive(Debug, Args)]
pub struct ConvexityArgs {
    #[arg(long, value_name = "FILE")]
    pub matrix_a: PathBuf,
    #[arg(long, value_name = "FILE")]
    pub matrix_b: PathBuf,
    /// Number of random grids.
    #[arg(long, default_value_t = 20)]
    pub grids: usize,
    /// Largest grid size; sizes are drawn from 2..=max.
    #[arg(long, default_value_t = trexp_core::convexity::CERTIFY_GRID)]
    pub max_grid_size: usize,
    #[arg(long, default_value_t = trexp_core::sampling::DEFAULT_SEED)]
    pub seed: u64,
    #[command(flatten)]
    pub out: ReportArgs,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    /// `lo:hi:count`.
    #[arg(long, allow_hyphen_values = true)]
    pub t_range: TRange,
    #[arg(long, value_name = "CSV")]
    pub out: PathBuf,
}

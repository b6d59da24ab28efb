//! `fstar`: evaluate binary classifiers with F, F' and F*.
//!
//! Exit codes: 0 on success, 1 for runtime and I/O failures, 2 for usage
//! errors. Data goes to stdout, diagnostics to stderr.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "fstar",
    version,
    about = "Binary classifier evaluation with F, F' and F*"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Threshold a scores file and print the metric panel.
    Eval(EvalArgs),
    /// Print the metric panel for raw confusion-matrix counts.
    Matrix(MatrixArgs),
    /// Evaluate metrics along a threshold grid for one or more scores files.
    Sweep(SweepArgs),
    /// Convert between F and F*.
    Transform(TransformArgs),
    /// Write a seeded synthetic scores file.
    Synth(SynthArgs),
    /// Render the F-to-F* transform curve as SVG.
    Figure(FigureArgs),
}

#[derive(Debug, Args)]
pub struct ReportFlags {
    /// Beta for the weighted variants; adds f_beta, f_star_beta and f_prime_beta.
    #[arg(long)]
    pub beta: Option<f64>,
    /// Print the JSON report instead of a table.
    #[arg(long)]
    pub json: bool,
    /// Also write the JSON report to this file.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Scores file with a `score,label` header.
    #[arg(long, value_name = "PATH")]
    pub scores: PathBuf,
    /// Threshold; a record is predicted class 1 when its score is strictly greater.
    #[arg(short, long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub threshold: f64,
    /// Comma-separated metrics. `auc` is also accepted here.
    #[arg(long, default_value = "f,f_star")]
    pub metrics: String,
    #[command(flatten)]
    pub report: ReportFlags,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub tp: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub fp: i64,
    #[arg(long = "fn", allow_negative_numbers = true)]
    pub fn_: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub tn: i64,
    /// Comma-separated metrics [default: the full unweighted panel].
    #[arg(long)]
    pub metrics: Option<String>,
    #[command(flatten)]
    pub report: ReportFlags,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// One or more scores files; each is one classifier named by its file stem.
    #[arg(required = true, value_name = "SCORES")]
    pub inputs: Vec<PathBuf>,
    /// Threshold grid as start:stop:step.
    #[arg(long, default_value = "0:1:0.01", allow_hyphen_values = true)]
    pub grid: String,
    /// Comma-separated metrics.
    #[arg(long, default_value = "f,f_star")]
    pub metrics: String,
    /// Beta for the weighted variants; adds f_beta, f_star_beta and f_prime_beta.
    #[arg(long)]
    pub beta: Option<f64>,
    /// Curves table. With several inputs, `<stem>.<input>.csv` is written per input.
    #[arg(long, value_name = "PATH")]
    pub csv: PathBuf,
    /// Optional SVG with one panel per metric.
    #[arg(long, value_name = "PATH")]
    pub svg: Option<PathBuf>,
    /// Crossing report for every input pair [default: `<csv stem>.crossings.json`].
    #[arg(long, value_name = "PATH")]
    pub crossings: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct TransformArgs {
    /// F value to map onto F*.
    #[arg(long, allow_negative_numbers = true)]
    pub f: Option<f64>,
    /// F* value to map back onto F.
    #[arg(long, allow_negative_numbers = true)]
    pub fstar: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long, default_value_t = 100)]
    pub n0: usize,
    #[arg(long, default_value_t = 100)]
    pub n1: usize,
    /// Beta(alpha0, beta0) scores for class 0.
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub alpha0: f64,
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    pub beta0: f64,
    /// Beta(alpha1, beta1) scores for class 1.
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    pub alpha1: f64,
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub beta1: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file [default: stdout].
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[arg(long, value_name = "PATH")]
    pub out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    let result = match cli.command {
        Command::Eval(a) => commands::eval(&a),
        Command::Matrix(a) => commands::matrix(&a),
        Command::Sweep(a) => commands::sweep(&a),
        Command::Transform(a) => commands::transform(&a),
        Command::Synth(a) => commands::synth(&a),
        Command::Figure(a) => commands::figure(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fstar: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

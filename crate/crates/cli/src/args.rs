use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tridm::experiments::PropagatorKind;
use tridm::measures::InfoMode;
use tridm::model::PartitionId;

#[derive(Debug, Parser)]
#[command(
    name = "tri-dm",
    version,
    about = "Entanglement and information dynamics of a three-qubit register"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Measure every requested partition at a single time.
    Evolve(EvolveArgs),
    /// Sweep time (or κ) with explicit parameters.
    Sweep(SweepArgs),
    /// Run a named figure preset.
    Figure(FigureArgs),
    /// Compare the closed-form pair marginals with both propagators.
    Validate(ValidateArgs),
    /// Print the available figure presets.
    ListPresets,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    #[value(name = "csv+svg")]
    CsvSvg,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum AxisArg {
    #[default]
    Time,
    Kappa,
}

/// Physical parameter overrides.
#[derive(Clone, Debug, Default, Args)]
pub struct ParamArgs {
    #[arg(long, value_parser = finite)]
    pub alpha: Option<f64>,
    #[arg(long, value_parser = finite)]
    pub gamma: Option<f64>,
    #[arg(long, value_parser = unit_kappa)]
    pub kappa: Option<f64>,
    #[arg(long, value_parser = finite)]
    pub omega: Option<f64>,
    #[arg(long, value_parser = finite)]
    pub dz: Option<f64>,
}

#[derive(Clone, Debug, Default, Args)]
pub struct ModeArgs {
    /// exact, factorized or closed-form.
    #[arg(long, value_parser = parse_propagator)]
    pub propagator: Option<PropagatorKind>,
    /// total or total-minus-local.
    #[arg(long, value_parser = parse_info_mode)]
    pub info_mode: Option<InfoMode>,
    /// Evaluate closed forms away from α = π/3, γ = π/2, ω = 2.
    #[arg(long)]
    pub allow_nonconventional_closed_form: bool,
}

#[derive(Clone, Debug, Default, Args)]
pub struct OutputArgs {
    /// Output CSV path; standard output when omitted (csv format only).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Clone, Debug, Args)]
pub struct EvolveArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub mode: ModeArgs,
    #[arg(long, value_parser = finite, default_value_t = 0.0)]
    pub t: f64,
    /// Comma-separated partitions (AB, AC, BC, A, B, C, ABC).
    #[arg(long, value_delimiter = ',', value_parser = parse_partition)]
    pub partitions: Option<Vec<PartitionId>>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub mode: ModeArgs,
    #[arg(long, value_enum, default_value_t)]
    pub axis: AxisArg,
    /// Start of the swept range (t, or κ with --axis kappa).
    #[arg(long, value_parser = finite)]
    pub start: Option<f64>,
    #[arg(long, value_parser = finite)]
    pub end: Option<f64>,
    #[arg(long, value_parser = steps)]
    pub steps: Option<usize>,
    /// Fixed time of a κ sweep.
    #[arg(long, value_parser = finite, default_value_t = 0.0)]
    pub at_t: f64,
    #[arg(long, value_delimiter = ',', value_parser = parse_partition)]
    pub partitions: Option<Vec<PartitionId>>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Debug, Args)]
pub struct FigureArgs {
    /// Preset name, e.g. fig2a.
    #[arg(long)]
    pub name: String,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub mode: ModeArgs,
    #[arg(long, value_parser = steps)]
    pub steps: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Debug, Args)]
pub struct ValidateArgs {
    /// Output CSV path for the per-record report.
    #[arg(long)]
    pub out: PathBuf,
}

fn finite(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("'{s}' is not a number"))?;
    if !v.is_finite() {
        return Err(format!("'{s}' is not finite"));
    }
    Ok(v)
}

fn unit_kappa(s: &str) -> Result<f64, String> {
    let v = finite(s)?;
    if !(0.0..=1.0).contains(&v) {
        return Err("kappa out of [0,1]".into());
    }
    Ok(v)
}

fn steps(s: &str) -> Result<usize, String> {
    let n: usize = s
        .parse()
        .map_err(|_| format!("'{s}' is not a positive integer"))?;
    if n < 2 {
        return Err("steps must be at least 2".into());
    }
    Ok(n)
}

fn parse_partition(s: &str) -> Result<PartitionId, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_propagator(s: &str) -> Result<PropagatorKind, String> {
    s.parse()
}

fn parse_info_mode(s: &str) -> Result<InfoMode, String> {
    s.parse()
}

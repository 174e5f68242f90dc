//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

const UNITS_NOTE: &str = "Units: k_B = ħ = 1. Energies (--gap) and temperatures (--temp) share \
one unit; --beta is its inverse. The probe qubit has H = diag(0, ε). The control qubit is \
√α|0⟩ + √(1−α)|1⟩ with switch coherence ξ = 4α(1−α).";

#[derive(Debug, Parser)]
#[command(
    name = "switch-thermo",
    version,
    about = "Quantum-switch-assisted qubit thermometry: QFI sweeps, optimal gaps, thresholds and TUR bounds",
    after_help = UNITS_NOTE
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sweep one parameter and tabulate the QFI of the selected probes.
    Sweep(SweepArgs),
    /// Solve for the optimal dimensionless gap x* = ε/T at a given coherence.
    Optimize(OptimizeArgs),
    /// Temperature below which the switched qubit beats a harmonic oscillator.
    Threshold(ThresholdArgs),
    /// Switched thermodynamic uncertainty bound and its consistency check.
    Tur(TurArgs),
    /// Write the data behind a figure or the headline numbers.
    Reproduce(ReproduceArgs),
}

/// Control-qubit weight, given either directly or through the coherence.
#[derive(Debug, Clone, Copy, Args)]
pub struct ControlArgs {
    /// Control weight α ∈ [0, 1].
    #[arg(long, conflicts_with = "xi")]
    pub alpha: Option<f64>,
    /// Switch coherence ξ = 4α(1−α) ∈ [0, 1].
    #[arg(long)]
    pub xi: Option<f64>,
}

/// Bath temperature, as inverse temperature or temperature.
#[derive(Debug, Clone, Copy, Args)]
pub struct TemperatureArgs {
    /// Inverse temperature β ≥ 0.
    #[arg(long, conflicts_with = "temp")]
    pub beta: Option<f64>,
    /// Temperature T > 0.
    #[arg(long)]
    pub temp: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweptParameter {
    Temperature,
    Beta,
    Gap,
    Alpha,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, serde::Serialize)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Probe {
    QubitNoswitch,
    QubitSwitch,
    HarmonicOscillator,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Figure {
    Fig2,
    Fig3,
    Fig4,
    Headline,
    All,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Parameter to sweep.
    #[arg(long)]
    pub param: SweptParameter,
    /// First grid value.
    #[arg(long)]
    pub start: f64,
    /// Last grid value.
    #[arg(long)]
    pub stop: f64,
    /// Number of grid points (≥ 2), endpoints included.
    #[arg(long, default_value_t = 101)]
    pub points: usize,
    /// Probe gap ε > 0 [default: 1].
    #[arg(long)]
    pub gap: Option<f64>,
    #[command(flatten)]
    pub control: ControlArgs,
    #[command(flatten)]
    pub temperature: TemperatureArgs,
    /// Damping strength λ ∈ [0, 1]; values below 1 use the numerical spectral QFI (exploratory).
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
    /// Comma-separated probes to evaluate.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "qubit_noswitch,qubit_switch,harmonic_oscillator"
    )]
    pub probes: Vec<Probe>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OptimizeArgs {
    #[command(flatten)]
    pub control: ControlArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    /// Probe gap ε > 0.
    #[arg(long, default_value_t = 1.0)]
    pub gap: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TurArgs {
    #[command(flatten)]
    pub temperature: TemperatureArgs,
    /// Probe gap ε > 0.
    #[arg(long, default_value_t = 1.0)]
    pub gap: f64,
    #[command(flatten)]
    pub control: ControlArgs,
    /// Number of independent repetitions ν ≥ 1.
    #[arg(long, default_value_t = 1)]
    pub nu: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    /// Which data set to write.
    #[arg(value_enum)]
    pub figure: Figure,
    /// Output directory (created if missing).
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Grid points along the swept axis (gap axis for fig2, temperature axis otherwise).
    #[arg(long)]
    pub points: Option<usize>,
    /// Probe gap ε for fig3/fig4 [default: 1].
    #[arg(long)]
    pub gap: Option<f64>,
    #[command(flatten)]
    pub control: ControlArgs,
}

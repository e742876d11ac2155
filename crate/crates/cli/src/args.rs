use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pseudoharm_core::model::EnergyUnit;
use pseudoharm_core::Parity;

use crate::parse::{self, Indices, Reals};

#[derive(Debug, Parser)]
#[command(
    name = "pseudoharm",
    version,
    about = "Bound states of the 1D pseudoharmonic oscillator x^2/2 + alpha/(2x^2), singular or with a constant cutoff at |x| < delta"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy levels by one method
    Spectrum(SpectrumArgs),
    /// Sampled eigenfunction
    Wavefunction(WavefunctionArgs),
    /// Ground-state energies by all routes, next to the reference table
    Table1(Table1Args),
    /// Exact and estimated ground-state energies and c0 over a range of alpha
    GroundstateScan(ScanArgs),
    /// Sine-basis matrix eigenvalues
    Matmech(MatmechArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Units {
    /// hbar omega
    Hw,
    /// ground energy of the enclosing infinite well (needs --rho)
    E1,
}

impl Units {
    pub fn suffix(self) -> &'static str {
        match self {
            Units::Hw => "hw",
            Units::E1 => "e1",
        }
    }

    pub fn core(self) -> EnergyUnit {
        match self {
            Units::Hw => EnergyUnit::Hw,
            Units::E1 => EnergyUnit::E1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
    Both,
}

impl ParityArg {
    pub fn list(self) -> Vec<Parity> {
        match self {
            ParityArg::Even => vec![Parity::Even],
            ParityArg::Odd => vec![Parity::Odd],
            ParityArg::Both => vec![Parity::Even, Parity::Odd],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ParityArg::Even => "even",
            ParityArg::Odd => "odd",
            ParityArg::Both => "both",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// closed form of the singular potential
    Closed,
    /// exact transcendental condition of the regularized potential
    Transcendental,
    /// small-cutoff expansion
    Asymptotic,
    /// sine-basis matrix mechanics
    Matrix,
}

impl MethodArg {
    pub fn name(self) -> &'static str {
        match self {
            MethodArg::Closed => "closed",
            MethodArg::Transcendental => "transcendental",
            MethodArg::Asymptotic => "asymptotic",
            MethodArg::Matrix => "matrix",
        }
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write the artifact here (plus PATH.meta.json) instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long, value_enum, default_value_t = Units::Hw)]
    pub units: Units,
}

#[derive(Debug, Args)]
pub struct PotentialArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = parse::real)]
    pub alpha: f64,
    /// Cutoff; omit for the singular potential
    #[arg(long, value_parser = parse::real)]
    pub delta: Option<f64>,
    /// Admit alpha < -1/4 for the regularized potential (shooting solver, no accuracy promise)
    #[arg(long)]
    pub experimental_alpha_below_quarter: bool,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    /// Basis size
    #[arg(long, value_parser = parse::count, default_value = "2000")]
    pub nmax: usize,
    /// hbar omega / E1 of the enclosing well
    #[arg(long, value_parser = parse::real, default_value = "5")]
    pub rho: f64,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,
    #[arg(long, value_enum, default_value_t = ParityArg::Both)]
    pub parity: ParityArg,
    /// Display indices, e.g. 0..3 or 0,2,5 (inclusive)
    #[arg(long, value_parser = parse::index_set, default_value = "0..3", conflicts_with = "ground")]
    pub n: Indices,
    /// Only the lowest even state
    #[arg(long)]
    pub ground: bool,
    /// Default: closed without --delta, transcendental with it
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    #[command(flatten)]
    pub matrix: MatrixArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct WavefunctionArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,
    #[arg(long, value_enum, default_value_t = ParityArg::Even)]
    pub parity: ParityArg,
    /// Display index
    #[arg(long, value_parser = parse::count, default_value = "0", conflicts_with = "ground")]
    pub n: usize,
    /// The lowest even state
    #[arg(long)]
    pub ground: bool,
    /// Default: closed without --delta, transcendental with it
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse::real, default_value = "-5")]
    pub x_min: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = parse::real, default_value = "5")]
    pub x_max: f64,
    #[arg(long, value_parser = parse::count, default_value = "1001")]
    pub samples: usize,
    #[command(flatten)]
    pub matrix: MatrixArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct Table1Args {
    /// Cutoff (default: the reference 0.002)
    #[arg(long, value_parser = parse::real)]
    pub delta: Option<f64>,
    /// Comma-separated couplings (default: the reference rows)
    #[arg(long, allow_hyphen_values = true, value_parser = parse::real_list)]
    pub alpha: Option<Reals>,
    /// Matrix basis size
    #[arg(long, value_parser = parse::count, default_value = "2000", conflicts_with = "long_run")]
    pub nmax: usize,
    /// Matrix hbar omega / E1 (default: the reference 50)
    #[arg(long, value_parser = parse::real)]
    pub rho: Option<f64>,
    /// Use the reference basis size (10000; minutes per row)
    #[arg(long)]
    pub long_run: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Comma-separated couplings in [-1/4, 0)
    #[arg(long, allow_hyphen_values = true, value_parser = parse::real_list, conflicts_with = "alpha_range")]
    pub alpha: Option<Reals>,
    /// LO..HI inside [-1/4, 0), sampled at --steps equispaced points
    #[arg(long, allow_hyphen_values = true, value_parser = parse::interval, default_value = "-0.25..-0.01")]
    pub alpha_range: (f64, f64),
    #[arg(long, value_parser = parse::count, default_value = "25")]
    pub steps: usize,
    /// Comma-separated cutoffs
    #[arg(long, value_parser = parse::real_list, default_value = "0.002")]
    pub delta: Reals,
    /// hbar omega / E1, used only with --units e1
    #[arg(long, value_parser = parse::real, default_value = "5")]
    pub rho: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct MatmechArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,
    #[arg(long, value_enum, default_value_t = ParityArg::Both)]
    pub parity: ParityArg,
    /// Block indices, e.g. 0..4
    #[arg(long, value_parser = parse::index_set, default_value = "0..4")]
    pub n: Indices,
    #[command(flatten)]
    pub matrix: MatrixArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

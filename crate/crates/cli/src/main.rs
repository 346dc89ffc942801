//! Command-line front end: single evaluations, reduced-gap sweeps to CSV,
//! the verification suite, and the surface-tension/cutoff calculator.
//!
//! Exit codes: 0 success, 1 computational or verification failure, 2 usage
//! error.

mod commands;
mod config;

use clap::{Args, Parser, Subcommand, ValueEnum};
use commands::CmdError;
use config::FileConfig;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "casimir-plasma",
    version,
    about = "Casimir force, energy and entropy of two screened-plasma half-spaces, \
             with cross-checking oracles and a surface-tension/cutoff calculator"
)]
struct Cli {
    /// Emit a machine-readable JSON object instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Relative quadrature tolerance (for `verify`: overrides every check tolerance)
    #[arg(long, global = true, value_name = "TOL")]
    rel_tol: Option<f64>,

    /// Absolute quadrature tolerance
    #[arg(long, global = true, value_name = "TOL")]
    abs_tol: Option<f64>,

    /// Flat key=value config file; command-line flags override file values
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Casimir force per unit area
    Force(ModeArgs),
    /// Casimir free energy and internal energy per unit area
    Energy(ModeArgs),
    /// Casimir entropy per unit area
    Entropy(ModeArgs),
    /// Surface-energy ledger and the surface-versus-Casimir comparison
    Surface(SurfaceArgs),
    /// Sweep the reduced gap and write a plot-ready CSV table
    Sweep(SweepArgs),
    /// Run the named verification checks; exit 0 only if all pass
    Verify,
    /// Surface tension to time-splitting cutoff (dilute dielectric ball)
    Cutoff(CutoffArgs),
}

/// Either reduced mode (`--x`) or dimensional mode (`--kappa --beta --a`);
/// the two flag sets are mutually exclusive.
#[derive(Args, Clone)]
struct ModeArgs {
    /// Reduced gap x = kappa * a (reduced mode)
    #[arg(long)]
    x: Option<f64>,

    /// Report dimensionless reduced values; only with --x
    #[arg(long)]
    reduced: bool,

    /// Inverse screening length, 1/cm (dimensional mode)
    #[arg(long)]
    kappa: Option<f64>,

    /// Inverse temperature, 1/erg (dimensional mode)
    #[arg(long)]
    beta: Option<f64>,

    /// Gap width, cm; "inf" is accepted (dimensional mode)
    #[arg(long)]
    a: Option<f64>,
}

#[derive(Args, Clone)]
struct SurfaceArgs {
    #[command(flatten)]
    mode: ModeArgs,

    /// Slab thickness, cm (bulk terms only; surface terms are d-independent)
    #[arg(long)]
    d: Option<f64>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Spacing {
    Linear,
    Log,
}

#[derive(Args, Clone)]
struct SweepArgs {
    /// Smallest reduced gap
    #[arg(long)]
    x_min: Option<f64>,

    /// Largest reduced gap
    #[arg(long)]
    x_max: Option<f64>,

    /// Number of grid points (>= 2)
    #[arg(long)]
    points: Option<usize>,

    /// Grid spacing; log requires x-min > 0
    #[arg(long, value_enum)]
    spacing: Option<Spacing>,

    /// Comma-separated column subset (default: all columns)
    #[arg(long, value_delimiter = ',')]
    outputs: Option<Vec<String>>,

    /// Output CSV path
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct CutoffArgs {
    /// Susceptibility epsilon - 1 (dilute regime: <= 0.1)
    #[arg(long)]
    epsilon_minus_1: Option<f64>,

    /// Surface tension, dyne/cm
    #[arg(long)]
    sigma: Option<f64>,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = Cli::parse();

    let file = match &cli.config {
        Some(path) => match FileConfig::load(path) {
            Ok(f) => f,
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        },
        None => FileConfig::empty(),
    };

    let outcome = match &cli.command {
        Command::Force(args) => commands::run_force(&cli, args, &file),
        Command::Energy(args) => commands::run_energy(&cli, args, &file),
        Command::Entropy(args) => commands::run_entropy(&cli, args, &file),
        Command::Surface(args) => commands::run_surface(&cli, args, &file),
        Command::Sweep(args) => commands::run_sweep(&cli, args, &file),
        Command::Verify => commands::run_verify(&cli),
        Command::Cutoff(args) => commands::run_cutoff(&cli, args, &file),
    };

    match outcome {
        Ok(code) => code,
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CmdError::Failure(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

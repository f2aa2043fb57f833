use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::{Initial, KickOp, RhoShape};
use crate::output::Format;

/// Dressed spectrum of two Ising-coupled charge qubits in a resonator.
#[derive(Debug, Parser)]
#[command(name = "dressed", version, about)]
pub struct Cli {
    /// TOML configuration file; flags override its values.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Output file (stdout when omitted).
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Photon-number cutoff of the truncated space.
    #[arg(long, global = true)]
    pub n_max: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Resonant-line spectrum E/J versus ξ = ω/J.
    Spectrum(SpectrumArgs),
    /// Crossing points of neighbouring minus-branch levels.
    Crossings(CrossingsArgs),
    /// Regions and ground states along the ξ grid.
    Phase(PhaseArgs),
    /// Rabi splitting √(J²+g²) − J.
    Rabi(ModelArgs),
    /// Damping-rate ratio, closed form and golden rule.
    Damping(DampingArgs),
    /// Closed forms against dense diagonalization.
    Verify(ModelArgs),
    /// Singlet population under exact time evolution.
    Evolve(EvolveArgs),
    /// Circuit parameters to model frequencies.
    Device(DeviceArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct ModelArgs {
    /// Ising coupling J (GHz).
    #[arg(long)]
    pub j: Option<f64>,
    /// Qubit-resonator coupling g (GHz).
    #[arg(long)]
    pub g: Option<f64>,
    /// Resonator frequency ω (GHz).
    #[arg(long)]
    pub omega: Option<f64>,
    /// Qubit splitting ω_a (GHz); defaults to ω.
    #[arg(long)]
    pub omega_a: Option<f64>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct GridArgs {
    #[arg(long = "g-over-j")]
    pub g_over_j: Option<f64>,
    #[arg(long)]
    pub xi_start: Option<f64>,
    #[arg(long)]
    pub xi_stop: Option<f64>,
    #[arg(long)]
    pub xi_count: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    /// Photon-number range, e.g. 0-2.
    #[arg(long)]
    pub levels: Option<String>,
    /// Comma-separated branches from s, 0, +, -.
    #[arg(long, allow_hyphen_values = true)]
    pub branches: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct CrossingsArgs {
    /// One or more g/J values, comma-separated.
    #[arg(long = "g-over-j", value_delimiter = ',')]
    pub g_over_j: Vec<f64>,
    /// Range of n, e.g. 0-18.
    #[arg(long)]
    pub levels: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct PhaseArgs {
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DampingArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub g1: Option<f64>,
    #[arg(long)]
    pub g2: Option<f64>,
    #[arg(long, value_enum)]
    pub rho: Option<RhoShape>,
    /// ρ₀ or η of bath 1.
    #[arg(long)]
    pub rho1: Option<f64>,
    /// ρ₀ or η of bath 2.
    #[arg(long)]
    pub rho2: Option<f64>,
    /// Reference frequency in ω_l (defaults to ω).
    #[arg(long)]
    pub omega_ref: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct EvolveArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, value_enum)]
    pub initial: Option<Initial>,
    /// Last time point (1/GHz).
    #[arg(long)]
    pub t_stop: Option<f64>,
    #[arg(long)]
    pub t_count: Option<usize>,
    /// Apply a bath operator once before evolving.
    #[arg(long, value_enum)]
    pub kick: Option<KickOp>,
}

#[derive(Debug, Clone, Args)]
pub struct DeviceArgs {
    /// Mutual capacitance (F).
    #[arg(long)]
    pub c_m: Option<f64>,
    /// Box capacitance C_Σ (F).
    #[arg(long)]
    pub c_sigma: Option<f64>,
    /// Gate capacitance (F).
    #[arg(long)]
    pub c_g: Option<f64>,
    /// Gate voltage (V).
    #[arg(long)]
    pub v_g: Option<f64>,
    /// Josephson energy (GHz).
    #[arg(long)]
    pub e_j: Option<f64>,
    /// SQUID loop area (m²).
    #[arg(long)]
    pub loop_area: Option<f64>,
    /// SQUID to line distance (m).
    #[arg(long)]
    pub distance: Option<f64>,
    /// Resonator length (m).
    #[arg(long)]
    pub length: Option<f64>,
    /// Inductance per length (H/m).
    #[arg(long)]
    pub inductance_per_length: Option<f64>,
    /// Capacitance per length (F/m).
    #[arg(long)]
    pub capacitance_per_length: Option<f64>,
    #[arg(long)]
    pub mode: Option<u32>,
    /// Flux quantum (Wb); h/2e by default.
    #[arg(long)]
    pub flux_quantum: Option<f64>,
}

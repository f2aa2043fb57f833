mod check;
mod physics;
mod sweep;

use std::path::PathBuf;

use dressed::analytic::Branch;
use dressed::ModelParams64;

use crate::cli::{Command, GridArgs, ModelArgs};
use crate::config::{pick, FileConfig};
use crate::error::{CliError, CliResult};
use crate::output::{Format, Table};

pub const SEED_VAR: &str = "DRESSED_SEED";
const DEFAULT_SEED: u64 = 1;

/// Settings shared by every command after merging config and flags.
pub struct Ctx {
    pub file: FileConfig,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub n_max: Option<usize>,
}

/// A rendered result plus whether a check inside it failed.
pub struct Report {
    pub table: Table,
    pub failed: bool,
}

impl From<Table> for Report {
    fn from(table: Table) -> Self {
        Report {
            table,
            failed: false,
        }
    }
}

pub fn run(ctx: &Ctx, command: &Command) -> CliResult<Report> {
    match command {
        Command::Spectrum(a) => sweep::spectrum(ctx, a).map(Into::into),
        Command::Crossings(a) => sweep::crossings(ctx, a).map(Into::into),
        Command::Phase(a) => sweep::phase(ctx, a).map(Into::into),
        Command::Rabi(a) => physics::rabi(ctx, a).map(Into::into),
        Command::Damping(a) => physics::damping(ctx, a).map(Into::into),
        Command::Device(a) => physics::device(ctx, a).map(Into::into),
        Command::Verify(a) => check::verify(ctx, a),
        Command::Evolve(a) => check::evolve(ctx, a).map(Into::into),
    }
}

impl Ctx {
    pub fn n_max(&self, default: usize) -> usize {
        pick(self.n_max, self.file.model.n_max, default)
    }

    /// Model parameters; ω_a follows ω unless set.
    pub fn model(&self, a: &ModelArgs) -> CliResult<ModelParams64> {
        let m = &self.file.model;
        let j = pick(a.j, m.j, 4.0);
        let g = pick(a.g, m.g, 2.0);
        let omega = pick(a.omega, m.omega, 4.0);
        let omega_a = pick(a.omega_a, m.omega_a, omega);
        Ok(ModelParams64::new(omega_a, omega, j, g, self.n_max(40))?)
    }

    /// ξ grid from flags, config and the (0, 4] default with 200 points.
    pub fn grid(&self, a: &GridArgs) -> CliResult<(f64, f64, usize)> {
        let s = &self.file.sweep;
        let start = pick(a.xi_start, s.xi_start, 0.02);
        let stop = pick(a.xi_stop, s.xi_stop, 4.0);
        let count = pick(a.xi_count, s.xi_count, 200);
        if count < 2 {
            return Err(CliError::usage(format!(
                "--xi-count must be >= 2, got {count}"
            )));
        }
        if !(start > 0.0 && stop > start && stop.is_finite()) {
            return Err(CliError::usage(format!(
                "xi grid needs 0 < start < stop, got {start}..{stop}"
            )));
        }
        Ok((start, stop, count))
    }

    pub fn g_over_j(&self, a: &GridArgs) -> CliResult<f64> {
        let g = pick(a.g_over_j, self.file.sweep.g_over_j, 0.5);
        if !(g >= 0.0 && g.is_finite()) {
            return Err(CliError::usage(format!("--g-over-j must be >= 0, got {g}")));
        }
        Ok(g)
    }
}

pub fn echo_model(t: &mut Table, p: &ModelParams64) {
    t.meta("J", p.j)
        .meta("g", p.g)
        .meta("omega", p.omega)
        .meta("omega_a", p.omega_a)
        .meta("n_max", p.n_max)
        .meta("units", "GHz");
}

pub fn parse_branches(s: &str) -> CliResult<Vec<Branch>> {
    let mut out = Vec::new();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let b = Branch::parse(part)
            .ok_or_else(|| CliError::usage(format!("unknown branch '{part}' (use s, 0, +, -)")))?;
        if !out.contains(&b) {
            out.push(b);
        }
    }
    if out.is_empty() {
        return Err(CliError::usage("no branches selected"));
    }
    out.sort();
    Ok(out)
}

pub fn seed() -> CliResult<u64> {
    match std::env::var(SEED_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::usage(format!("{SEED_VAR} must be an unsigned integer, got '{v}'"))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_SEED),
        Err(e) => Err(CliError::usage(format!("{SEED_VAR}: {e}"))),
    }
}

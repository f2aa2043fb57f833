//! TOML run configuration. Every key is optional; command-line flags win.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{CliError, CliResult};
use crate::output::Format;

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    #[serde(default)]
    pub model: ModelSection,
    #[serde(default)]
    pub sweep: SweepSection,
    #[serde(default)]
    pub output: OutputSection,
    #[serde(default)]
    pub bath: BathSection,
    #[serde(default)]
    pub evolve: EvolveSection,
    #[serde(default)]
    pub device: DeviceSection,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSection {
    pub j: Option<f64>,
    pub g: Option<f64>,
    pub omega: Option<f64>,
    pub omega_a: Option<f64>,
    pub n_max: Option<usize>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    pub g_over_j: Option<f64>,
    pub g_over_j_list: Option<Vec<f64>>,
    pub xi_start: Option<f64>,
    pub xi_stop: Option<f64>,
    pub xi_count: Option<usize>,
    pub levels: Option<String>,
    pub branches: Option<String>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RhoShape {
    Flat,
    Ohmic,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BathSection {
    pub g1: Option<f64>,
    pub g2: Option<f64>,
    pub rho: Option<RhoShape>,
    /// ρ₀ (flat) or η (ohmic) of bath 1.
    pub rho1: Option<f64>,
    pub rho2: Option<f64>,
    pub omega_ref: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Initial {
    /// (|0,ψ⁻⟩ + |0,ψ⁺⟩)/√2
    Mixed,
    /// |0,ψ⁻⟩
    Singlet,
    /// Product ket |1,↑↓⟩
    UpDown,
    /// Seeded random complex vector (DRESSED_SEED)
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KickOp {
    SigmaMinus1,
    SigmaMinus2,
    Collective,
    Antisymmetric,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvolveSection {
    pub initial: Option<Initial>,
    pub t_stop: Option<f64>,
    pub t_count: Option<usize>,
    pub kick: Option<KickOp>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeviceSection {
    pub c_m: Option<f64>,
    pub c_sigma: Option<f64>,
    pub c_g: Option<f64>,
    pub v_g: Option<f64>,
    pub e_j: Option<f64>,
    pub loop_area: Option<f64>,
    pub distance: Option<f64>,
    pub length: Option<f64>,
    pub inductance_per_length: Option<f64>,
    pub capacitance_per_length: Option<f64>,
    pub mode: Option<u32>,
    pub flux_quantum: Option<f64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text).map_err(|msg| CliError::Config {
            path: path.to_path_buf(),
            msg,
        })
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        toml::from_str(text).map_err(|e| e.message().to_string())
    }
}

/// First of flag, config value, default.
pub fn pick<T>(flag: Option<T>, file: Option<T>, default: T) -> T {
    flag.or(file).unwrap_or(default)
}

/// Parse "A-B", "A..B", "A..=B" or a single "N" as an inclusive range.
pub fn parse_levels(s: &str) -> CliResult<(usize, usize)> {
    let s = s.trim();
    let bad = || CliError::usage(format!("bad level range '{s}', expected A-B"));
    let (a, b) = if let Some((a, b)) = s.split_once("..=") {
        (a, b)
    } else if let Some((a, b)) = s.split_once("..") {
        (a, b)
    } else if let Some((a, b)) = s.split_once('-') {
        (a, b)
    } else {
        (s, s)
    };
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(CliError::usage(format!("empty level range '{s}'")));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_ranges() {
        assert_eq!(parse_levels("0-18").unwrap(), (0, 18));
        assert_eq!(parse_levels("2..5").unwrap(), (2, 5));
        assert_eq!(parse_levels("2..=5").unwrap(), (2, 5));
        assert_eq!(parse_levels("3").unwrap(), (3, 3));
        assert!(parse_levels("5-2").is_err());
        assert!(parse_levels("a-b").is_err());
    }

    #[test]
    fn sections_parse() {
        let c = FileConfig::parse(
            "[model]\nj = 4.0\ng = 2.0\n[sweep]\nlevels = \"0-3\"\n[output]\nformat = \"json\"\n[bath]\nrho = \"ohmic\"\n[evolve]\ninitial = \"up-down\"\n",
        )
        .unwrap();
        assert_eq!(c.model.j, Some(4.0));
        assert_eq!(c.output.format, Some(Format::Json));
        assert_eq!(c.bath.rho, Some(RhoShape::Ohmic));
        assert_eq!(c.evolve.initial, Some(Initial::UpDown));
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(FileConfig::parse("[model]\nq = 1\n").is_err());
        assert!(FileConfig::parse("[nope]\n").is_err());
        assert!(FileConfig::parse("[model]\nj = \"four\"\n").is_err());
    }
}

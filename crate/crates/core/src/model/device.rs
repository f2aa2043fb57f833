//! Circuit parameters → model frequencies.
//!
//! Inputs are SI except the Josephson energy, which is given in GHz.
//! Outputs are ordinary frequencies E/h in GHz. Only `f64` is supported
//! here: products such as e²·C_m underflow single precision.

use serde::{Deserialize, Serialize};

use super::params::ModelParams;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    /// Elementary charge (C).
    pub elementary_charge: f64,
    /// Planck constant h (J·s).
    pub planck: f64,
    /// Flux quantum used in the qubit-field coupling (Wb).
    pub flux_quantum: f64,
}

impl PhysicalConstants {
    pub const E: f64 = 1.602_176_634e-19;
    pub const H: f64 = 6.626_070_15e-34;

    pub fn hbar(&self) -> f64 {
        self.planck / (2.0 * std::f64::consts::PI)
    }

    /// Same constants but with Φ₀ = ħ/2e instead of h/2e.
    pub fn with_reduced_flux_quantum(self) -> Self {
        Self {
            flux_quantum: self.hbar() / (2.0 * self.elementary_charge),
            ..self
        }
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            elementary_charge: Self::E,
            planck: Self::H,
            flux_quantum: Self::H / (2.0 * Self::E),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeviceParams {
    /// Mutual capacitance C_m (F).
    pub c_m: f64,
    /// Total capacitance of one box C_Σ (F).
    pub c_sigma: f64,
    /// Gate capacitance C_g (F).
    pub c_g: f64,
    /// Gate voltage V_g (V).
    pub v_g: f64,
    /// Josephson energy E_J (GHz).
    pub e_j: f64,
    /// SQUID loop area S (m²).
    pub loop_area: f64,
    /// SQUID to line distance d (m).
    pub distance: f64,
    /// Resonator length L (m).
    pub length: f64,
    /// Inductance per unit length l (H/m).
    pub inductance_per_length: f64,
    /// Capacitance per unit length c (F/m).
    pub capacitance_per_length: f64,
    /// Mode number n₀.
    pub mode: u32,
}

impl DeviceParams {
    pub fn validate(&self) -> Result<()> {
        let all = [
            self.c_m,
            self.c_sigma,
            self.c_g,
            self.v_g,
            self.e_j,
            self.loop_area,
            self.distance,
            self.length,
            self.inductance_per_length,
            self.capacitance_per_length,
        ];
        if all.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain("non-finite device parameter".into()));
        }
        if self.c_m < 0.0 {
            return Err(Error::Domain(format!("C_m must be >= 0, got {}", self.c_m)));
        }
        if self.c_sigma <= self.c_m {
            return Err(Error::Domain(format!(
                "C_Sigma ({}) must exceed C_m ({})",
                self.c_sigma, self.c_m
            )));
        }
        let geometry = [
            ("S", self.loop_area),
            ("d", self.distance),
            ("L", self.length),
            ("l", self.inductance_per_length),
            ("c", self.capacitance_per_length),
        ];
        for (name, v) in geometry {
            if v <= 0.0 {
                return Err(Error::Domain(format!("{name} must be positive, got {v}")));
            }
        }
        if self.mode == 0 {
            return Err(Error::Domain("mode number must be >= 1".into()));
        }
        Ok(())
    }
}

/// Model frequencies derived from a device, all in GHz.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeviceMapping {
    pub j: f64,
    pub e_c: f64,
    /// Dimensionless gate charge C_g V_g / 2e.
    pub gate_charge: f64,
    pub omega_a: f64,
    pub omega: f64,
    pub g: f64,
}

impl DeviceMapping {
    pub fn to_model(&self, n_max: usize) -> Result<ModelParams<f64>> {
        ModelParams::new(self.omega_a, self.omega, self.j, self.g, n_max)
    }
}

/// Evaluate the charge-qubit and resonator formulas.
pub fn device_to_model(dev: &DeviceParams, k: &PhysicalConstants) -> Result<DeviceMapping> {
    dev.validate()?;
    let e = k.elementary_charge;
    let to_ghz = |energy: f64| energy / k.planck * 1e-9;
    let cap_diff = dev.c_sigma * dev.c_sigma - dev.c_m * dev.c_m;

    let j = to_ghz(e * e * dev.c_m / (2.0 * cap_diff));
    let e_c = to_ghz(2.0 * e * e * dev.c_sigma / cap_diff);
    let gate_charge = dev.c_g * dev.v_g / (2.0 * e);
    let omega_a = 2.0 * e_c * (gate_charge - 0.5);

    let omega_rad = f64::from(dev.mode) * std::f64::consts::PI
        / (dev.length * (dev.inductance_per_length * dev.capacitance_per_length).sqrt());
    let omega = omega_rad / (2.0 * std::f64::consts::PI) * 1e-9;

    let g = dev.loop_area * dev.e_j * (k.hbar() * dev.inductance_per_length * omega_rad).sqrt()
        / (k.flux_quantum * dev.distance * dev.length.sqrt());

    Ok(DeviceMapping {
        j,
        e_c,
        gate_charge,
        omega_a,
        omega,
        g,
    })
}

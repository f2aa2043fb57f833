use serde::{Deserialize, Serialize};

use crate::{Error, Result, Scalar};

/// The four model frequencies (GHz) and the photon-number cutoff.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams<T> {
    /// Qubit level spacing ω_a.
    pub omega_a: T,
    /// Resonator frequency ω.
    pub omega: T,
    /// Ising coupling J.
    pub j: T,
    /// Qubit-field coupling g.
    pub g: T,
    /// Largest photon number kept in the Fock space.
    pub n_max: usize,
}

impl<T: Scalar> ModelParams<T> {
    pub fn new(omega_a: T, omega: T, j: T, g: T, n_max: usize) -> Result<Self> {
        let p = Self {
            omega_a,
            omega,
            j,
            g,
            n_max,
        };
        p.validate()?;
        Ok(p)
    }

    /// Resonant parameters, ω_a = ω.
    pub fn resonant(omega: T, j: T, g: T, n_max: usize) -> Result<Self> {
        Self::new(omega, omega, j, g, n_max)
    }

    /// Resonant parameters in units of J: J = 1, ω = ω_a = ξ, g = g/J.
    pub fn scaled(xi: T, g_over_j: T, n_max: usize) -> Result<Self> {
        Self::resonant(xi, T::one(), g_over_j, n_max)
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [self.omega_a, self.omega, self.j, self.g]
            .iter()
            .all(|x| x.is_finite());
        if !finite {
            return Err(Error::InvalidParams("non-finite frequency".into()));
        }
        if self.omega <= T::zero() {
            return Err(Error::InvalidParams(format!(
                "resonator frequency must be positive, got {}",
                self.omega
            )));
        }
        if self.g < T::zero() {
            return Err(Error::InvalidParams(format!(
                "coupling g must be non-negative, got {}",
                self.g
            )));
        }
        if self.n_max < 2 {
            return Err(Error::InvalidParams(format!(
                "n_max must be at least 2, got {}",
                self.n_max
            )));
        }
        Ok(())
    }

    /// Exact equality ω_a == ω; closed forms for the three-level blocks
    /// are used only when this holds.
    pub fn is_resonant(&self) -> bool {
        self.omega_a == self.omega
    }

    /// Rescaled longitudinal field ξ = ω/J.
    pub fn xi(&self) -> T {
        self.omega / self.j
    }

    pub fn g_over_j(&self) -> T {
        self.g / self.j
    }

    pub fn with_n_max(self, n_max: usize) -> Result<Self> {
        Self::new(self.omega_a, self.omega, self.j, self.g, n_max)
    }

    /// Same J, g and cutoff, moved onto the resonant line at ξ.
    pub fn at_xi(self, xi: T) -> Result<Self> {
        let omega = xi * self.j;
        Self::new(omega, omega, self.j, self.g, self.n_max)
    }
}

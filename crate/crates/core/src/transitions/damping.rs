use serde::{Deserialize, Serialize};

use super::operators::bath_amplitude;
use crate::analytic::{singlet_state, w0_state, w1_eigensystem, DressedState};
use crate::model::ModelParams;
use crate::{Error, Result, Scalar};

/// Double-peak separation √(J² + g²) − J (GHz).
pub fn rabi_splitting<T: Scalar>(p: &ModelParams<T>) -> T {
    let r = p.j.hypot(p.g);
    if p.j > T::zero() {
        p.g * p.g / (r + p.j)
    } else {
        r - p.j
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase")]
pub enum SpectralDensity<T> {
    /// ρ(ω) = ρ₀
    Flat { rho0: T },
    /// ρ(ω) = η·ω, defined for ω ≥ 0
    Ohmic { eta: T },
}

impl<T: Scalar> SpectralDensity<T> {
    pub fn eval(&self, omega: T) -> Result<T> {
        match *self {
            SpectralDensity::Flat { rho0 } => Ok(rho0),
            SpectralDensity::Ohmic { eta } => {
                if omega < T::zero() {
                    return Err(Error::Domain(format!(
                        "ohmic density evaluated at negative frequency {omega}"
                    )));
                }
                Ok(eta * omega)
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SpectralDensity::Flat { .. } => "flat",
            SpectralDensity::Ohmic { .. } => "ohmic",
        }
    }
}

/// Qubit-bath couplings and the two spectral densities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BathModel<T> {
    pub g1: T,
    pub g2: T,
    pub rho1: SpectralDensity<T>,
    pub rho2: SpectralDensity<T>,
}

impl<T: Scalar> BathModel<T> {
    /// G⁺ = g₁ + g₂
    pub fn g_plus(&self) -> T {
        self.g1 + self.g2
    }

    /// G⁻ = g₁ − g₂
    pub fn g_minus(&self) -> T {
        self.g1 - self.g2
    }

    pub fn is_symmetric(&self) -> bool {
        self.g1 == self.g2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ForbiddenReason {
    /// G⁻ = 0: the singlet is dark.
    SymmetricCoupling,
    /// ρ₂ vanishes at ω₂.
    ZeroDensity,
    /// The γ₂ matrix element vanishes.
    ZeroMatrixElement,
}

impl ForbiddenReason {
    pub fn name(self) -> &'static str {
        match self {
            ForbiddenReason::SymmetricCoupling => "symmetric_coupling",
            ForbiddenReason::ZeroDensity => "zero_density",
            ForbiddenReason::ZeroMatrixElement => "zero_matrix_element",
        }
    }
}

/// γ₁/γ₂, or the reason transition 2 carries no rate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum DampingOutcome<T> {
    Ratio(T),
    Forbidden(ForbiddenReason),
}

impl<T: Scalar> DampingOutcome<T> {
    pub fn value(&self) -> Option<T> {
        match *self {
            DampingOutcome::Ratio(v) => Some(v),
            DampingOutcome::Forbidden(_) => None,
        }
    }
}

/// Damping-rate ratio for φ₀⁽⁻⁾ → |0,↓↓⟩ over |0,ψ⁻⟩ → |0,↓↓⟩ in the
/// phenomenological form
/// `[sin(θ/2) G⁺(ω₁)ρ₁(ω₁) / (G⁻(ω₂)ρ₂(ω₂))]²`,
/// with ω_l = ω_ref − (2 − l)(J + √(J² + g²)).
///
/// `omega_ref` defaults to the resonator frequency. Returns
/// `(outcome, ω₁, ω₂)`.
pub fn damping_ratio<T: Scalar>(
    p: &ModelParams<T>,
    bath: &BathModel<T>,
    omega_ref: Option<T>,
) -> Result<(DampingOutcome<T>, T, T)> {
    let w = omega_ref.unwrap_or(p.omega);
    let omega1 = w - (p.j + p.j.hypot(p.g));
    let omega2 = w;
    let rho1 = bath.rho1.eval(omega1)?;
    let rho2 = bath.rho2.eval(omega2)?;
    if bath.g_minus() == T::zero() {
        return Ok((
            DampingOutcome::Forbidden(ForbiddenReason::SymmetricCoupling),
            omega1,
            omega2,
        ));
    }
    if rho2 == T::zero() {
        return Ok((
            DampingOutcome::Forbidden(ForbiddenReason::ZeroDensity),
            omega1,
            omega2,
        ));
    }
    let half = w1_eigensystem(p).theta / T::lit(2.0);
    let inner = half.sin() * bath.g_plus() * rho1 / (bath.g_minus() * rho2);
    Ok((DampingOutcome::Ratio(inner * inner), omega1, omega2))
}

/// Fermi golden-rule rate 2π |⟨to|g₁σ₋⁽¹⁾ + g₂σ₋⁽²⁾|from⟩|² ρ(E_from − E_to).
pub fn golden_rule_rate<T: Scalar>(
    from: &DressedState<T>,
    to: &DressedState<T>,
    g1: T,
    g2: T,
    density: &SpectralDensity<T>,
) -> Result<T> {
    let m = bath_amplitude(from, to, g1, g2);
    let rho = density.eval(from.energy - to.energy)?;
    Ok(T::lit(2.0) * T::PI() * m * m * rho)
}

/// The same two decays computed from the dressed eigenvectors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GoldenRuleRatio<T> {
    pub gamma1: T,
    pub gamma2: T,
    /// E(φ₀⁽⁻⁾) − E(φ₀⁽⁰⁾)
    pub omega1: T,
    /// E(φ₀⁽ˢ⁾) − E(φ₀⁽⁰⁾)
    pub omega2: T,
    pub outcome: DampingOutcome<T>,
}

pub fn golden_rule_ratio<T: Scalar>(
    p: &ModelParams<T>,
    bath: &BathModel<T>,
) -> Result<GoldenRuleRatio<T>> {
    let ground = w0_state(p);
    let dressed = w1_eigensystem(p).minus;
    let singlet = singlet_state(p, 0)?;
    let gamma1 = golden_rule_rate(&dressed, &ground, bath.g1, bath.g2, &bath.rho1)?;
    let gamma2 = golden_rule_rate(&singlet, &ground, bath.g1, bath.g2, &bath.rho2)?;
    let outcome = if gamma2 == T::zero() {
        let reason = if bath.g_minus() == T::zero() {
            ForbiddenReason::SymmetricCoupling
        } else if bath_amplitude(&singlet, &ground, bath.g1, bath.g2) == T::zero() {
            ForbiddenReason::ZeroMatrixElement
        } else {
            ForbiddenReason::ZeroDensity
        };
        DampingOutcome::Forbidden(reason)
    } else {
        DampingOutcome::Ratio(gamma1 / gamma2)
    };
    Ok(GoldenRuleRatio {
        gamma1,
        gamma2,
        omega1: dressed.energy - ground.energy,
        omega2: singlet.energy - ground.energy,
        outcome,
    })
}

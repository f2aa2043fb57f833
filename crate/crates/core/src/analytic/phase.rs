use serde::{Deserialize, Serialize};

use crate::model::SpinLabel;
use crate::Scalar;

/// Ground state of the bare Ising pair as a function of ξ_a = ω_a/J (J > 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HqPhase {
    /// ξ_a < −2: |↑↑⟩.
    UpUp,
    /// ξ_a = −2: |↑↑⟩ degenerate with ψ±.
    BoundaryUpUpPair,
    /// −2 < ξ_a < 2: ψ⁺ and ψ⁻ degenerate at −J.
    EntangledPair,
    /// ξ_a = 2: ψ± degenerate with |↓↓⟩.
    BoundaryPairDownDown,
    /// ξ_a > 2: |↓↓⟩.
    DownDown,
}

impl HqPhase {
    pub fn name(self) -> &'static str {
        match self {
            HqPhase::UpUp => "up_up",
            HqPhase::BoundaryUpUpPair => "boundary_up_up|psi_pair",
            HqPhase::EntangledPair => "psi_pair",
            HqPhase::BoundaryPairDownDown => "boundary_psi_pair|down_down",
            HqPhase::DownDown => "down_down",
        }
    }

    pub fn is_boundary(self) -> bool {
        matches!(
            self,
            HqPhase::BoundaryUpUpPair | HqPhase::BoundaryPairDownDown
        )
    }

    pub fn ground_kets(self) -> &'static [SpinLabel] {
        use SpinLabel::*;
        match self {
            HqPhase::UpUp => &[UpUp],
            HqPhase::BoundaryUpUpPair => &[UpUp, PsiPlus, PsiMinus],
            HqPhase::EntangledPair => &[PsiPlus, PsiMinus],
            HqPhase::BoundaryPairDownDown => &[PsiPlus, PsiMinus, DownDown],
            HqPhase::DownDown => &[DownDown],
        }
    }
}

/// Ising energies in units of J, ordered as [`SpinLabel::ALL`].
pub fn hq_energies<T: Scalar>(xi_a: T) -> [T; 4] {
    let one = T::one();
    [xi_a + one, -one, -one, one - xi_a]
}

pub fn hq_phase<T: Scalar>(xi_a: T) -> HqPhase {
    let two = T::lit(2.0);
    if xi_a < -two {
        HqPhase::UpUp
    } else if xi_a == -two {
        HqPhase::BoundaryUpUpPair
    } else if xi_a < two {
        HqPhase::EntangledPair
    } else if xi_a == two {
        HqPhase::BoundaryPairDownDown
    } else {
        HqPhase::DownDown
    }
}

use serde::{Deserialize, Serialize};

use crate::analytic::DressedState;
use crate::linalg::Matrix;
use crate::model::spin::{coupled_sigma_minus, sigma_plus, to_coupled};
use crate::numeric::{apply_spin_operator, QuantumState};
use crate::{Error, Result, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LadderOp {
    SigmaPlus1,
    SigmaMinus1,
    SigmaPlus2,
    SigmaMinus2,
    /// S₋ = σ₋⁽¹⁾ + σ₋⁽²⁾
    Collective,
    /// σ₋⁽¹⁾ − σ₋⁽²⁾
    Antisymmetric,
}

impl LadderOp {
    pub fn name(self) -> &'static str {
        match self {
            LadderOp::SigmaPlus1 => "sigma_plus_1",
            LadderOp::SigmaMinus1 => "sigma_minus_1",
            LadderOp::SigmaPlus2 => "sigma_plus_2",
            LadderOp::SigmaMinus2 => "sigma_minus_2",
            LadderOp::Collective => "S_minus",
            LadderOp::Antisymmetric => "A_minus",
        }
    }

    /// Matrix in the coupled spin basis.
    pub fn coupled_matrix<T: Scalar>(self) -> Matrix<T> {
        match self {
            LadderOp::SigmaMinus1 => coupled_sigma_minus(1),
            LadderOp::SigmaMinus2 => coupled_sigma_minus(2),
            LadderOp::SigmaPlus1 => to_coupled(&sigma_plus(1)),
            LadderOp::SigmaPlus2 => to_coupled(&sigma_plus(2)),
            LadderOp::Collective | LadderOp::Antisymmetric => {
                let a = coupled_sigma_minus::<T>(1);
                let b = coupled_sigma_minus::<T>(2);
                let sign = if self == LadderOp::Collective {
                    T::one()
                } else {
                    -T::one()
                };
                Matrix::from_fn(4, 4, |i, j| a[(i, j)] + sign * b[(i, j)])
            }
        }
    }
}

fn element<T: Scalar>(from: &DressedState<T>, to: &DressedState<T>, op: &Matrix<T>) -> T {
    let mut acc = T::zero();
    for &(kt, ct) in &to.amplitudes {
        for &(kf, cf) in &from.amplitudes {
            if kt.photon == kf.photon {
                acc = acc + ct * cf * op[(kt.spin.index(), kf.spin.index())];
            }
        }
    }
    acc
}

/// ⟨to| O |from⟩ for a qubit ladder operator O.
pub fn transition_amplitude<T: Scalar>(
    from: &DressedState<T>,
    to: &DressedState<T>,
    op: LadderOp,
) -> T {
    element(from, to, &op.coupled_matrix())
}

/// ⟨to| g₁σ₋⁽¹⁾ + g₂σ₋⁽²⁾ |from⟩.
pub fn bath_amplitude<T: Scalar>(from: &DressedState<T>, to: &DressedState<T>, g1: T, g2: T) -> T {
    g1 * transition_amplitude(from, to, LadderOp::SigmaMinus1)
        + g2 * transition_amplitude(from, to, LadderOp::SigmaMinus2)
}

/// ⟨to| O |from⟩ for dense real vectors over the coupled basis.
pub fn matrix_element_dense<T: Scalar>(from: &[T], to: &[T], op: LadderOp) -> Result<T> {
    if from.len() != to.len() || !from.len().is_multiple_of(4) {
        return Err(Error::BasisMismatch {
            expected: from.len(),
            got: to.len(),
        });
    }
    let m = op.coupled_matrix::<T>();
    let mut acc = T::zero();
    for shell in 0..from.len() / 4 {
        for r in 0..4 {
            for c in 0..4 {
                acc = acc + to[4 * shell + r] * m[(r, c)] * from[4 * shell + c];
            }
        }
    }
    Ok(acc)
}

/// Apply `op` once and renormalize.
pub fn kick<T: Scalar>(state: &QuantumState<T>, op: LadderOp) -> Result<QuantumState<T>> {
    QuantumState::normalized(apply_spin_operator(state, &op.coupled_matrix()))
}

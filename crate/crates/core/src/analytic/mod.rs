//! Closed-form dressed spectrum, weak-coupling expansion and the
//! level-crossing structure.

mod critical;
mod levels;
mod phase;
mod small;
mod sweep;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::dot;
use crate::model::{basis_dimension, BasisKet, BlockId};
use crate::Scalar;

pub use critical::{
    classify_region, crossing_point, crossing_points, level_shift, perturbative_levels, xi0, xi1,
    CrossingPoint, GroundState, Region, RegionReport,
};
pub use levels::{
    dressed_levels, level_energy, minus_energy, singlet_level, singlet_state, w0_level, w0_state,
    w1_eigensystem, wn_eigensystem, W1Eigensystem, WnEigensystem,
};
pub use phase::{hq_energies, hq_phase, HqPhase};
pub use small::{eigen2, tridiag3_eigen};
pub use sweep::{linspace, spectrum_sweep, LevelSelection, SpectrumRow, SpectrumTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sector {
    Singlet,
    Triplet,
}

/// Branch label α of a dressed level E_n^(α).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Branch {
    /// |n,ψ⁻⟩, energy nω − J.
    Singlet,
    /// W⁽⁰⁾ for n = 0, the middle level of W⁽ⁿ⁺¹⁾ otherwise.
    Zero,
    Plus,
    Minus,
}

impl Branch {
    pub const ALL: [Branch; 4] = [Branch::Singlet, Branch::Zero, Branch::Plus, Branch::Minus];

    pub fn symbol(self) -> &'static str {
        match self {
            Branch::Singlet => "s",
            Branch::Zero => "0",
            Branch::Plus => "+",
            Branch::Minus => "-",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.trim() {
            "s" => Some(Branch::Singlet),
            "0" => Some(Branch::Zero),
            "+" | "p" | "plus" => Some(Branch::Plus),
            "-" | "m" | "minus" => Some(Branch::Minus),
            _ => None,
        }
    }

    /// Invariant block hosting level (n, branch).
    pub fn block(self, n: usize) -> BlockId {
        match (self, n) {
            (Branch::Singlet, n) => BlockId::Singlet(n),
            (Branch::Zero, 0) => BlockId::Triplet(0),
            (_, 0) => BlockId::Triplet(1),
            (_, n) => BlockId::Triplet(n + 1),
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// One eigenpair of the model Hamiltonian with its amplitudes on the kets
/// of its own block.
#[derive(Debug, Clone, PartialEq)]
pub struct DressedState<T> {
    pub sector: Sector,
    pub n: usize,
    pub branch: Branch,
    pub energy: T,
    pub amplitudes: Vec<(BasisKet, T)>,
}

impl<T: Scalar> DressedState<T> {
    pub fn block(&self) -> BlockId {
        self.branch.block(self.n)
    }

    pub fn label(&self) -> String {
        format!("E{}({})", self.n, self.branch)
    }

    pub fn norm_sqr(&self) -> T {
        self.amplitudes.iter().map(|&(_, c)| c * c).sum()
    }

    /// Coefficient on `ket`, zero if absent.
    pub fn coefficient(&self, ket: BasisKet) -> T {
        self.amplitudes
            .iter()
            .find(|(k, _)| *k == ket)
            .map_or(T::zero(), |&(_, c)| c)
    }

    /// Dense vector over the coupled basis up to `n_max` photons.
    pub fn to_dense(&self, n_max: usize) -> Vec<T> {
        let mut v = vec![T::zero(); basis_dimension(n_max)];
        for &(k, c) in &self.amplitudes {
            if k.photon <= n_max {
                v[k.index()] = c;
            }
        }
        v
    }

    pub fn overlap(&self, other: &Self) -> T {
        self.amplitudes
            .iter()
            .map(|&(k, c)| c * other.coefficient(k))
            .sum()
    }

    /// ‖H·v − E·v‖ against a full Hamiltonian matrix.
    pub fn residual(&self, h: &crate::linalg::Matrix<T>, n_max: usize) -> T {
        let v = self.to_dense(n_max);
        let hv = h.matvec(&v);
        let r: Vec<T> = hv
            .iter()
            .zip(&v)
            .map(|(&a, &b)| a - self.energy * b)
            .collect();
        dot(&r, &r).sqrt()
    }
}

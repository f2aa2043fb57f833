use std::collections::BTreeMap;

use super::oracle::{OracleSpectrum, DEGENERACY_TOL};
use crate::analytic::{dressed_levels, DressedState};
use crate::linalg::dot;
use crate::model::BlockId;
use crate::Scalar;

/// Analytic-versus-oracle agreement on one invariant block.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockCheck<T> {
    pub block: BlockId,
    pub analytic_count: usize,
    pub oracle_count: usize,
    /// max |E_analytic − E_oracle| / max(1, |E|) over sorted pairs.
    pub max_energy_dev: T,
    /// Smallest squared projection of an analytic state onto the oracle
    /// eigenspace at its energy.
    pub min_overlap: T,
    /// max ‖H·v − E·v‖ of the analytic states.
    pub max_residual: T,
}

impl<T: Scalar> BlockCheck<T> {
    pub fn passes(&self, tol: T) -> bool {
        self.analytic_count == self.oracle_count
            && self.max_energy_dev <= tol
            && self.min_overlap >= T::one() - tol
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport<T> {
    pub blocks: Vec<BlockCheck<T>>,
}

impl<T: Scalar> VerificationReport<T> {
    pub fn max_energy_dev(&self) -> T {
        self.blocks
            .iter()
            .fold(T::zero(), |m, b| m.max(b.max_energy_dev))
    }

    pub fn min_overlap(&self) -> T {
        self.blocks
            .iter()
            .fold(T::one(), |m, b| m.min(b.min_overlap))
    }

    pub fn passes(&self, tol: T) -> bool {
        self.blocks.iter().all(|b| b.passes(tol))
    }
}

/// Compare every closed-form level on complete blocks against the oracle.
pub fn compare_with_analytic<T: Scalar>(oracle: &OracleSpectrum<T>) -> VerificationReport<T> {
    let p = &oracle.params;
    let mut by_block: BTreeMap<BlockId, Vec<DressedState<T>>> = BTreeMap::new();
    for s in dressed_levels(p) {
        by_block.entry(s.block()).or_default().push(s);
    }
    let deg = T::accumulated_tol(DEGENERACY_TOL);

    let blocks = by_block
        .into_iter()
        .map(|(block, states)| {
            let idx = oracle.indices_in(block);
            let mut oracle_e: Vec<T> = idx
                .iter()
                .map(|&k| oracle.decomposition.eigenvalues[k])
                .collect();
            oracle_e.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut analytic_e: Vec<T> = states.iter().map(|s| s.energy).collect();
            analytic_e.sort_by(|a, b| a.partial_cmp(b).unwrap());

            let max_energy_dev = if oracle_e.len() == analytic_e.len() {
                analytic_e
                    .iter()
                    .zip(&oracle_e)
                    .map(|(&a, &o)| (a - o).abs() / a.abs().max(T::one()))
                    .fold(T::zero(), T::max)
            } else {
                T::infinity()
            };

            let mut min_overlap = T::one();
            let mut max_residual = T::zero();
            for s in &states {
                let v = s.to_dense(p.n_max);
                let scale = s.energy.abs().max(T::one());
                let captured: T = idx
                    .iter()
                    .filter(|&&k| {
                        (oracle.decomposition.eigenvalues[k] - s.energy).abs() <= deg * scale
                    })
                    .map(|&k| {
                        let o = oracle.decomposition.eigenvector(k);
                        let d = dot(&o, &v);
                        d * d
                    })
                    .sum();
                min_overlap = min_overlap.min(captured);
                max_residual = max_residual.max(s.residual(&oracle.hamiltonian, p.n_max));
            }

            BlockCheck {
                block,
                analytic_count: states.len(),
                oracle_count: idx.len(),
                max_energy_dev,
                min_overlap,
                max_residual,
            }
        })
        .collect();
    VerificationReport { blocks }
}

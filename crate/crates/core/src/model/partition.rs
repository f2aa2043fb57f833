use std::fmt;

use serde::{Deserialize, Serialize};

use super::basis::{basis_dimension, BasisKet, SpinLabel};

/// Invariant subspace of the Hamiltonian.
///
/// `Singlet(n)` is the one-dimensional block |n,ψ⁻⟩. `Triplet(k)` is W⁽ᵏ⁾:
/// W⁽⁰⁾ = {|0,↓↓⟩}, W⁽¹⁾ = {|0,ψ⁺⟩, |1,↓↓⟩} and, for k ≥ 2,
/// W⁽ᵏ⁾ = {|k−2,↑↑⟩, |k−1,ψ⁺⟩, |k,↓↓⟩}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BlockId {
    Singlet(usize),
    Triplet(usize),
}

impl BlockId {
    /// Block that contains `ket`.
    pub fn of(ket: BasisKet) -> Self {
        match ket.spin {
            SpinLabel::PsiMinus => BlockId::Singlet(ket.photon),
            SpinLabel::DownDown => BlockId::Triplet(ket.photon),
            SpinLabel::PsiPlus => BlockId::Triplet(ket.photon + 1),
            SpinLabel::UpUp => BlockId::Triplet(ket.photon + 2),
        }
    }

    /// Full (untruncated) member list.
    pub fn kets(self) -> Vec<BasisKet> {
        match self {
            BlockId::Singlet(n) => vec![BasisKet::new(n, SpinLabel::PsiMinus)],
            BlockId::Triplet(0) => vec![BasisKet::new(0, SpinLabel::DownDown)],
            BlockId::Triplet(1) => vec![
                BasisKet::new(0, SpinLabel::PsiPlus),
                BasisKet::new(1, SpinLabel::DownDown),
            ],
            BlockId::Triplet(k) => vec![
                BasisKet::new(k - 2, SpinLabel::UpUp),
                BasisKet::new(k - 1, SpinLabel::PsiPlus),
                BasisKet::new(k, SpinLabel::DownDown),
            ],
        }
    }

    /// Largest photon number the block needs.
    pub fn max_photon(self) -> usize {
        match self {
            BlockId::Singlet(n) | BlockId::Triplet(n) => n,
        }
    }

    pub fn is_singlet(self) -> bool {
        matches!(self, BlockId::Singlet(_))
    }
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockId::Singlet(n) => write!(f, "S{n}"),
            BlockId::Triplet(k) => write!(f, "W{k}"),
        }
    }
}

/// Members of one block present in the truncated space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub id: BlockId,
    pub indices: Vec<usize>,
    /// Some members lie above the photon cutoff.
    pub truncated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPartition {
    pub n_max: usize,
    /// Indices of |n,ψ⁻⟩ for n = 0..=n_max.
    pub singlet_chain: Vec<usize>,
    /// W⁽⁰⁾, W⁽¹⁾, ... in order, including the truncated tail.
    pub triplet_blocks: Vec<Block>,
}

impl BlockPartition {
    /// Every block, singlets first, each singlet ket as its own block.
    pub fn blocks(&self) -> Vec<Block> {
        let singlets = self.singlet_chain.iter().enumerate().map(|(n, &i)| Block {
            id: BlockId::Singlet(n),
            indices: vec![i],
            truncated: false,
        });
        singlets
            .chain(self.triplet_blocks.iter().cloned())
            .collect()
    }

    pub fn complete_blocks(&self) -> Vec<Block> {
        self.blocks().into_iter().filter(|b| !b.truncated).collect()
    }

    /// Whether the block identified by `id` fits inside the cutoff.
    pub fn is_complete(&self, id: BlockId) -> bool {
        id.max_photon() <= self.n_max
    }

    pub fn dimension(&self) -> usize {
        basis_dimension(self.n_max)
    }
}

/// Partition the coupled basis up to `n_max` photons into invariant blocks.
pub fn block_partition(n_max: usize) -> BlockPartition {
    let singlet_chain = (0..=n_max)
        .map(|n| BasisKet::new(n, SpinLabel::PsiMinus).index())
        .collect();
    // ↑↑ at photon n_max lands in W⁽ⁿᵐᵃˣ⁺²⁾, the last non-empty block
    let triplet_blocks = (0..=n_max + 2)
        .map(|k| {
            let id = BlockId::Triplet(k);
            let indices = id
                .kets()
                .into_iter()
                .filter(|ket| ket.photon <= n_max)
                .map(BasisKet::index)
                .collect();
            Block {
                id,
                indices,
                truncated: k > n_max,
            }
        })
        .collect();
    BlockPartition {
        n_max,
        singlet_chain,
        triplet_blocks,
    }
}

use std::collections::BTreeMap;

use super::jacobi::{eigensolve_symmetric, EigenDecomposition, DEFAULT_TOL};
use crate::linalg::{dot, Matrix};
use crate::model::{block_partition, hamiltonian_matrix, BasisKet, BlockId, ModelParams};
use crate::{Result, Scalar};

/// Eigenvalues closer than this (relative to max(1, |E|)) are one cluster.
pub const DEGENERACY_TOL: f64 = 1e-9;
/// Minimum squared weight on a single block for a vector to be labelled.
pub const CAPTURE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OracleLabel {
    /// Lies in a block that fits under the photon cutoff.
    Block(BlockId),
    /// Lies in a block cut by the photon cutoff.
    Edge(BlockId),
    /// No single block captures the vector.
    Unassigned,
}

impl OracleLabel {
    pub fn block(self) -> Option<BlockId> {
        match self {
            OracleLabel::Block(b) => Some(b),
            _ => None,
        }
    }
}

/// Full spectrum of the truncated Hamiltonian with block labels.
#[derive(Debug, Clone)]
pub struct OracleSpectrum<T> {
    pub params: ModelParams<T>,
    pub hamiltonian: Matrix<T>,
    pub decomposition: EigenDecomposition<T>,
    pub labels: Vec<OracleLabel>,
}

impl<T: Scalar> OracleSpectrum<T> {
    pub fn energies(&self) -> &[T] {
        &self.decomposition.eigenvalues
    }

    /// Indices of eigenpairs labelled with `block`.
    pub fn indices_in(&self, block: BlockId) -> Vec<usize> {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, l)| l.block() == Some(block))
            .map(|(k, _)| k)
            .collect()
    }

    pub fn energies_in(&self, block: BlockId) -> Vec<T> {
        self.indices_in(block)
            .into_iter()
            .map(|k| self.decomposition.eigenvalues[k])
            .collect()
    }
}

/// Diagonalize the full Hamiltonian and attach block labels.
///
/// Inside a degenerate cluster the Jacobi vectors may mix blocks; each
/// cluster is re-expressed by projecting onto the blocks it touches and
/// orthonormalizing, which keeps the vectors exact eigenvectors because
/// every block projector commutes with H.
pub fn oracle_spectrum<T: Scalar>(p: &ModelParams<T>) -> Result<OracleSpectrum<T>> {
    p.validate()?;
    let h = hamiltonian_matrix(p);
    let mut dec = eigensolve_symmetric(&h, DEFAULT_TOL)?;
    let dim = h.rows();
    let block_of: Vec<BlockId> = (0..dim)
        .map(|i| BlockId::of(BasisKet::from_index(i)))
        .collect();

    let deg = T::accumulated_tol(DEGENERACY_TOL);
    let mut start = 0;
    while start < dim {
        let mut end = start + 1;
        while end < dim {
            let prev = dec.eigenvalues[end - 1];
            let cur = dec.eigenvalues[end];
            if cur - prev > deg * cur.abs().max(T::one()) {
                break;
            }
            end += 1;
        }
        if end - start > 1 {
            split_cluster(&h, &mut dec, &block_of, start, end);
        }
        start = end;
    }

    // Rayleigh quotients may reorder members of a cluster
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| {
        dec.eigenvalues[a]
            .partial_cmp(&dec.eigenvalues[b])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.cmp(&b))
    });
    let eigenvalues: Vec<T> = order.iter().map(|&k| dec.eigenvalues[k]).collect();
    let eigenvectors = Matrix::from_fn(dim, dim, |i, k| dec.eigenvectors[(i, order[k])]);
    dec = EigenDecomposition {
        eigenvalues,
        eigenvectors,
        sweeps: dec.sweeps,
    };

    let partition = block_partition(p.n_max);
    let complete: BTreeMap<BlockId, bool> = partition
        .blocks()
        .into_iter()
        .map(|b| (b.id, !b.truncated))
        .collect();
    let capture = T::one() - T::accumulated_tol(CAPTURE_TOL);
    let labels = (0..dim)
        .map(|k| {
            let v = dec.eigenvector(k);
            let mut weights: BTreeMap<BlockId, T> = BTreeMap::new();
            for (i, &x) in v.iter().enumerate() {
                let w = weights.entry(block_of[i]).or_insert(T::zero());
                *w = *w + x * x;
            }
            let (id, w) = weights
                .into_iter()
                .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
                .expect("non-empty vector");
            if w < capture {
                OracleLabel::Unassigned
            } else if complete[&id] {
                OracleLabel::Block(id)
            } else {
                OracleLabel::Edge(id)
            }
        })
        .collect();

    Ok(OracleSpectrum {
        params: *p,
        hamiltonian: h,
        decomposition: dec,
        labels,
    })
}

fn split_cluster<T: Scalar>(
    h: &Matrix<T>,
    dec: &mut EigenDecomposition<T>,
    block_of: &[BlockId],
    start: usize,
    end: usize,
) {
    let cols: Vec<Vec<T>> = (start..end).map(|k| dec.eigenvector(k)).collect();
    let mut touched: Vec<BlockId> = Vec::new();
    for c in &cols {
        for (i, &x) in c.iter().enumerate() {
            if x != T::zero() && !touched.contains(&block_of[i]) {
                touched.push(block_of[i]);
            }
        }
    }
    touched.sort();

    let mut fresh: Vec<Vec<T>> = Vec::with_capacity(cols.len());
    for id in touched {
        let mut candidates: Vec<Vec<T>> = cols
            .iter()
            .map(|c| {
                c.iter()
                    .enumerate()
                    .map(|(i, &x)| if block_of[i] == id { x } else { T::zero() })
                    .collect()
            })
            .collect();
        let trace: T = candidates.iter().map(|c| dot(c, c)).sum();
        let rank = trace.round().to_usize().unwrap_or(0);
        for _ in 0..rank {
            let (best, norm) = candidates
                .iter()
                .enumerate()
                .map(|(k, c)| (k, dot(c, c).sqrt()))
                .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
                .expect("cluster is non-empty");
            if norm < T::lit(1e-6) {
                return;
            }
            let q: Vec<T> = candidates[best].iter().map(|&x| x / norm).collect();
            for c in candidates.iter_mut() {
                let proj = dot(c, &q);
                for (x, &qi) in c.iter_mut().zip(&q) {
                    *x = *x - proj * qi;
                }
            }
            fresh.push(q);
        }
    }
    if fresh.len() != cols.len() {
        return;
    }
    for (k, v) in fresh.into_iter().enumerate() {
        let hv = h.matvec(&v);
        dec.eigenvalues[start + k] = dot(&v, &hv);
        dec.eigenvectors.set_column(start + k, &v);
    }
}

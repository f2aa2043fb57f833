use num_complex::Complex;

use super::jacobi::EigenDecomposition;
use super::oracle::oracle_spectrum;
use crate::linalg::Matrix;
use crate::model::{basis_dimension, BasisKet, ModelParams, SpinLabel};
use crate::{Error, Result, Scalar};

const NORM_TOL: f64 = 1e-10;

/// Normalized complex state over the coupled basis.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState<T> {
    amplitudes: Vec<Complex<T>>,
}

impl<T: Scalar> QuantumState<T> {
    /// Wrap amplitudes that are already normalized.
    pub fn new(amplitudes: Vec<Complex<T>>) -> Result<Self> {
        check_dimension(amplitudes.len())?;
        let norm = norm(&amplitudes);
        if (norm - T::one()).abs() > T::clamp_tol(NORM_TOL) {
            return Err(Error::Unnormalized(norm.to_f64_lossy()));
        }
        Ok(Self { amplitudes })
    }

    /// Rescale arbitrary non-zero amplitudes to unit norm.
    pub fn normalized(amplitudes: Vec<Complex<T>>) -> Result<Self> {
        check_dimension(amplitudes.len())?;
        let norm = norm(&amplitudes);
        if !(norm > T::zero()) || !norm.is_finite() {
            return Err(Error::Unnormalized(norm.to_f64_lossy()));
        }
        Ok(Self {
            amplitudes: amplitudes.into_iter().map(|a| a / norm).collect(),
        })
    }

    pub fn basis(n_max: usize, ket: BasisKet) -> Self {
        let mut amplitudes = vec![Complex::new(T::zero(), T::zero()); basis_dimension(n_max)];
        amplitudes[ket.index()] = Complex::new(T::one(), T::zero());
        Self { amplitudes }
    }

    pub fn from_real(v: &[T]) -> Result<Self> {
        Self::normalized(v.iter().map(|&x| Complex::new(x, T::zero())).collect())
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn n_max(&self) -> usize {
        self.amplitudes.len() / 4 - 1
    }

    pub fn norm(&self) -> T {
        norm(&self.amplitudes)
    }

    pub fn population(&self, ket: BasisKet) -> T {
        self.amplitudes
            .get(ket.index())
            .map_or(T::zero(), |a| a.norm_sqr())
    }
}

fn check_dimension(len: usize) -> Result<()> {
    if len == 0 || !len.is_multiple_of(4) {
        return Err(Error::Argument(format!(
            "state length {len} is not a multiple of 4"
        )));
    }
    Ok(())
}

fn norm<T: Scalar>(a: &[Complex<T>]) -> T {
    a.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
}

/// Σ_n |⟨n,ψ⁻|ψ⟩|².
pub fn singlet_population<T: Scalar>(state: &QuantumState<T>) -> T {
    (0..=state.n_max())
        .map(|n| state.population(BasisKet::new(n, SpinLabel::PsiMinus)))
        .sum()
}

/// Apply a 4×4 coupled-basis spin operator to every photon shell. The
/// result is generally unnormalized.
pub fn apply_spin_operator<T: Scalar>(state: &QuantumState<T>, op: &Matrix<T>) -> Vec<Complex<T>> {
    assert_eq!((op.rows(), op.cols()), (4, 4), "spin operator must be 4x4");
    let a = state.amplitudes();
    let mut out = vec![Complex::new(T::zero(), T::zero()); a.len()];
    for shell in 0..a.len() / 4 {
        for r in 0..4 {
            let mut acc = Complex::new(T::zero(), T::zero());
            for c in 0..4 {
                acc = acc + a[4 * shell + c] * op[(r, c)];
            }
            out[4 * shell + r] = acc;
        }
    }
    out
}

/// exp(−iHt) through a fixed eigendecomposition.
#[derive(Debug, Clone)]
pub struct Propagator<T> {
    n_max: usize,
    decomposition: EigenDecomposition<T>,
}

impl<T: Scalar> Propagator<T> {
    pub fn new(p: &ModelParams<T>) -> Result<Self> {
        let oracle = oracle_spectrum(p)?;
        Ok(Self {
            n_max: p.n_max,
            decomposition: oracle.decomposition,
        })
    }

    pub fn from_decomposition(n_max: usize, decomposition: EigenDecomposition<T>) -> Self {
        Self {
            n_max,
            decomposition,
        }
    }

    pub fn decomposition(&self) -> &EigenDecomposition<T> {
        &self.decomposition
    }

    /// ψ(t) = Σ_k e^{−iE_k t} ⟨v_k|ψ(0)⟩ v_k.
    pub fn evolve(&self, state: &QuantumState<T>, t: T) -> Result<QuantumState<T>> {
        if !(t >= T::zero()) || !t.is_finite() {
            return Err(Error::Argument(format!(
                "time must be finite and >= 0, got {t}"
            )));
        }
        let dim = basis_dimension(self.n_max);
        if state.amplitudes.len() != dim {
            return Err(Error::BasisMismatch {
                expected: dim,
                got: state.amplitudes.len(),
            });
        }
        let v = &self.decomposition.eigenvectors;
        let psi = &state.amplitudes;
        let zero = Complex::new(T::zero(), T::zero());
        let mut out = vec![zero; dim];
        for k in 0..dim {
            let mut c = zero;
            for i in 0..dim {
                c = c + psi[i] * v[(i, k)];
            }
            let phase = Complex::from_polar(T::one(), -self.decomposition.eigenvalues[k] * t);
            let c = c * phase;
            for i in 0..dim {
                out[i] = out[i] + c * v[(i, k)];
            }
        }
        Ok(QuantumState { amplitudes: out })
    }
}

/// One-shot evolution; diagonalizes the Hamiltonian on every call.
pub fn evolve<T: Scalar>(
    state: &QuantumState<T>,
    p: &ModelParams<T>,
    t: T,
) -> Result<QuantumState<T>> {
    QuantumState::new(state.amplitudes.clone())?;
    Propagator::new(p)?.evolve(state, t)
}

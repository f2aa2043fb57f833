//! Dressed-state spectrum of two Ising-coupled charge qubits sharing a
//! single-mode transmission-line resonator.
//!
//! The crate is organised in four layers:
//!
//! * [`model`] builds the truncated Hilbert space, the Hamiltonian matrix and
//!   its invariant-block partition, and maps circuit parameters onto model
//!   frequencies.
//! * [`analytic`] holds the closed-form block eigensystems, the weak-coupling
//!   expansion, the level-crossing structure and parameter sweeps.
//! * [`numeric`] is the brute-force check: a cyclic Jacobi eigensolver on the
//!   full truncated matrix and exact spectral time evolution.
//! * [`transitions`] computes bath-induced matrix elements, selection rules,
//!   the Rabi splitting and damping-rate ratios.
//!
//! All physics is generic over the floating-point type through [`Scalar`];
//! the `*64` aliases below fix it to `f64`, which is what the CLI uses.

// `!(x > 0)` guards also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod error;
pub mod linalg;
pub mod model;
pub mod numeric;
pub mod scalar;
pub mod transitions;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use analytic::{Branch, CrossingPoint, DressedState, Sector, SpectrumTable};
pub use model::{BasisKet, BlockId, BlockPartition, DeviceParams, ModelParams, SpinLabel};
pub use numeric::{EigenDecomposition, OracleSpectrum, QuantumState};
pub use transitions::{BathModel, DampingOutcome, LadderOp, SpectralDensity, TransitionRecord};

pub type ModelParams64 = ModelParams<f64>;
pub type DressedState64 = DressedState<f64>;
pub type SpectrumTable64 = SpectrumTable<f64>;
pub type CrossingPoint64 = CrossingPoint<f64>;
pub type EigenDecomposition64 = EigenDecomposition<f64>;
pub type OracleSpectrum64 = OracleSpectrum<f64>;
pub type QuantumState64 = QuantumState<f64>;
pub type BathModel64 = BathModel<f64>;
pub type Matrix64 = linalg::Matrix<f64>;

pub type ModelParams32 = ModelParams<f32>;
pub type DressedState32 = DressedState<f32>;
pub type EigenDecomposition32 = EigenDecomposition<f32>;

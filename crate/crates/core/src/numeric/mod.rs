//! Brute-force reference: dense diagonalization of the full truncated
//! Hamiltonian and exact time evolution through its eigenbasis.

mod evolution;
mod jacobi;
mod oracle;
mod verify;

pub use evolution::{apply_spin_operator, evolve, singlet_population, Propagator, QuantumState};
pub use jacobi::{
    eigensolve_symmetric, eigensolve_symmetric_with, EigenDecomposition, DEFAULT_TOL, MAX_SWEEPS,
};
pub use oracle::{oracle_spectrum, OracleLabel, OracleSpectrum, CAPTURE_TOL, DEGENERACY_TOL};
pub use verify::{compare_with_analytic, BlockCheck, VerificationReport};

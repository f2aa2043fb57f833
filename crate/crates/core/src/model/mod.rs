//! Model parameters, Hilbert-space bookkeeping and Hamiltonian assembly.
//!
//! The Hamiltonian is the Ising pair
//! `½ω_a(σz¹ + σz²) + J σz¹σz²` plus a single resonator mode
//! `ω a†a + (g/√2)[(σ+¹ + σ+²)a + h.c.]`, with ħ = 1 and every frequency
//! in GHz.

mod basis;
mod device;
mod hamiltonian;
mod params;
mod partition;
pub mod spin;

pub use basis::{basis_dimension, build_basis, BasisKet, ProductSpin, SpinLabel};
pub use device::{device_to_model, DeviceMapping, DeviceParams, PhysicalConstants};
pub use hamiltonian::{
    coupled_to_product, hamiltonian_matrix, hamiltonian_matrix_product, total_spin_squared,
};
pub use params::ModelParams;
pub use partition::{block_partition, Block, BlockId, BlockPartition};

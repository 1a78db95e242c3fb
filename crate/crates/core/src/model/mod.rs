//! Hamiltonians and Lindblad generators for the dispersive two-atom model
//! and the full atoms + cavity model.

pub mod basis;
mod effective;
mod full;
mod liouvillian;
mod params;

pub use effective::{build_effective_liouvillian, effective_hamiltonian};
pub use full::{
    annihilation, build_full_liouvillian, excitation_number, full_hamiltonian, partial_trace_cavity,
    with_cavity_fock,
};
pub use liouvillian::{dissipator, Liouvillian};
pub use params::{EffectiveParams, FullModelParams, LARGE_DETUNING_RATIO};

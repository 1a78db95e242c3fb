//! Entanglement and nonlocality of two-qubit states.

mod bell;
mod concurrence;
mod thresholds;

pub use bell::{
    bell_max, bell_max_xform, correlation_matrix, tt_eigenvalues, verstraete_bounds,
    CORRELATOR_IMAG_TOL,
};
pub use concurrence::{
    concurrence, concurrence_x, spin_flip, spin_flip_lambdas, x_structure_defect, X_STRUCTURE_TOL,
};
pub use thresholds::{nt_threshold, omega_threshold, threshold_report, ThresholdReport};

use crate::error::Result;
use crate::state::DensityMatrix4;

/// Everything the general (non X-form) measures compute for one state.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureReport {
    pub concurrence: f64,
    pub bell_max: f64,
    /// Spin-flip lambdas, descending.
    pub lambdas: [f64; 4],
    pub t_matrix: [[f64; 3]; 3],
    /// Eigenvalues of `T Tᵀ`, descending.
    pub tt_eigs: [f64; 3],
}

pub fn measure_report(rho: &DensityMatrix4) -> Result<MeasureReport> {
    let lambdas = spin_flip_lambdas(rho)?;
    let t_matrix = correlation_matrix(rho)?;
    let tt_eigs = tt_eigenvalues(&t_matrix)?;
    Ok(MeasureReport {
        concurrence: concurrence::concurrence_from_lambdas(&lambdas),
        bell_max: bell::bell_from_tt(&tt_eigs),
        lambdas,
        t_matrix,
        tt_eigs,
    })
}

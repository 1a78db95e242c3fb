//! Time evolution and steady states: numeric propagation of any generator
//! alongside the closed-form solutions of the dispersive model.

mod analytic;
mod propagate;

pub use analytic::{analytic_state_symmetric, analytic_steady_asymmetric};
pub use propagate::{numeric_steady, propagate, trajectory, Trajectory, POSITIVITY_FLOOR};

pub use crate::state::{DensityMatrix, DensityMatrix4, ProductState};

//! Dense complex linear algebra sized for two-qubit and small Fock-space problems.

mod eigen;
mod expm;
mod matrix;
mod solve;

pub use eigen::{
    eigenvalues, herm_eigs, herm_sqrt, singular_values, HermEig, PSD_CLAMP_FLOOR, PSD_REJECT_FLOOR,
};
pub use expm::expm;
pub use matrix::CMatrix;
pub use solve::{lstsq, null_vector, solve, KERNEL_TOL};

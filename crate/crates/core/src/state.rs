//! Validated density matrices.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::basis::{DIM_ATOMS, IDX_00, IDX_01, IDX_10};
use crate::numkit::{herm_eigs, CMatrix};

pub const HERMITIAN_TOL: f64 = 1e-10;
pub const TRACE_TOL: f64 = 1e-10;
pub const MIN_EIGENVALUE_TOL: f64 = -1e-9;

/// Hermitian, unit-trace, positive-semidefinite matrix of any dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(CMatrix);

impl DensityMatrix {
    /// Checks the invariants and stores the Hermitian part.
    pub fn new(m: CMatrix) -> Result<Self> {
        Self::with_eigenvalue_floor(m, MIN_EIGENVALUE_TOL)
    }

    pub(crate) fn with_eigenvalue_floor(m: CMatrix, floor: f64) -> Result<Self> {
        m.require_square()?;
        if !m.is_finite() {
            return Err(Error::State("non-finite entries".into()));
        }
        let defect = m.hermiticity_defect();
        if defect > HERMITIAN_TOL {
            return Err(Error::State(format!("not Hermitian (defect {defect:e})")));
        }
        let m = m.hermitian_part();
        let tr = m.trace().re;
        if (tr - 1.0).abs() > TRACE_TOL {
            return Err(Error::State(format!("trace is {tr}, expected 1")));
        }
        let min = herm_eigs(&m)?.values[0];
        if min < floor {
            return Err(Error::State(format!("negative eigenvalue {min:e}")));
        }
        Ok(Self(m))
    }

    /// `|ψ⟩⟨ψ|` for a normalised `ψ`.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if (norm - 1.0).abs() > TRACE_TOL {
            return Err(Error::State(format!("state vector has norm² {norm}")));
        }
        Self::new(CMatrix::from_fn(psi.len(), psi.len(), |i, j| psi[i] * psi[j].conj()))
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self(CMatrix::identity(dim).scale_real(1.0 / dim as f64))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> CMatrix {
        self.0
    }

    pub fn min_eigenvalue(&self) -> Result<f64> {
        Ok(herm_eigs(&self.0)?.values[0])
    }
}

/// Two-atom state in the basis `|11⟩, |10⟩, |01⟩, |00⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix4(DensityMatrix);

impl DensityMatrix4 {
    pub fn new(m: CMatrix) -> Result<Self> {
        DensityMatrix::new(m)?.try_into()
    }

    /// Builds an X-shaped state from populations `(ρ₁₁, ρ₂₂, ρ₃₃, ρ₄₄)` and coherence `ρ₂₃`.
    pub fn from_x_entries(populations: [f64; 4], rho23: Complex64) -> Result<Self> {
        let mut m = CMatrix::real_diag(&populations);
        m[(1, 2)] = rho23;
        m[(2, 1)] = rho23.conj();
        Self::new(m)
    }

    pub fn product(state: ProductState) -> Self {
        let mut m = CMatrix::zeros(DIM_ATOMS, DIM_ATOMS);
        let k = state.index();
        m[(k, k)] = Complex64::new(1.0, 0.0);
        Self(DensityMatrix(m))
    }

    /// Entry `ρ_{ij}` with the conventional 1-based labels (`ρ₂₃ = entry(2, 3)`).
    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.0 .0[(i - 1, j - 1)]
    }

    pub fn as_density(&self) -> &DensityMatrix {
        &self.0
    }
}

impl Deref for DensityMatrix4 {
    type Target = DensityMatrix;

    fn deref(&self) -> &DensityMatrix {
        &self.0
    }
}

impl TryFrom<DensityMatrix> for DensityMatrix4 {
    type Error = Error;

    fn try_from(rho: DensityMatrix) -> Result<Self> {
        if rho.dim() != DIM_ATOMS {
            return Err(Error::Dimension {
                expected: "4x4 two-atom state".into(),
                found: format!("{0}x{0}", rho.dim()),
            });
        }
        Ok(Self(rho))
    }
}

impl From<DensityMatrix4> for DensityMatrix {
    fn from(rho: DensityMatrix4) -> Self {
        rho.0
    }
}

/// Product initial states used for the atom pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductState {
    /// `|0⟩₁ ⊗ |0⟩₂`
    Ground,
    /// `|1⟩₁ ⊗ |0⟩₂`
    AtomOneExcited,
    /// `|0⟩₁ ⊗ |1⟩₂`
    AtomTwoExcited,
}

impl ProductState {
    pub const ALL: [ProductState; 3] = [Self::Ground, Self::AtomOneExcited, Self::AtomTwoExcited];

    pub fn index(self) -> usize {
        match self {
            Self::Ground => IDX_00,
            Self::AtomOneExcited => IDX_10,
            Self::AtomTwoExcited => IDX_01,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::Ground => "00",
            Self::AtomOneExcited => "10",
            Self::AtomTwoExcited => "01",
        }
    }
}

impl fmt::Display for ProductState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ProductState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "00" => Ok(Self::Ground),
            "10" => Ok(Self::AtomOneExcited),
            "01" => Ok(Self::AtomTwoExcited),
            other => Err(Error::Parameter(format!(
                "initial state must be one of 00, 10, 01; got {other:?}"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_invalid_states() {
        assert!(DensityMatrix::new(CMatrix::real_diag(&[0.5, 0.6])).is_err());
        assert!(DensityMatrix::new(CMatrix::real_diag(&[1.1, -0.1])).is_err());
        let mut m = CMatrix::real_diag(&[0.5, 0.5]);
        m[(0, 1)] = Complex64::new(0.1, 0.0);
        assert!(DensityMatrix::new(m).is_err());
        assert!(DensityMatrix4::new(CMatrix::real_diag(&[0.5, 0.5])).is_err());
    }

    #[test]
    fn product_states_sit_on_the_right_index() {
        let rho = DensityMatrix4::product(ProductState::AtomOneExcited);
        assert_eq!(rho.entry(2, 2), Complex64::new(1.0, 0.0));
        assert_eq!("01".parse::<ProductState>().unwrap(), ProductState::AtomTwoExcited);
        assert!("11".parse::<ProductState>().is_err());
    }
}

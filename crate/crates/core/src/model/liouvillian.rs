use std::ops::Add;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numkit::{eigenvalues, CMatrix};

/// Generator `L` of `dρ/dt = L ρ` acting on column-stacked `vec(ρ)`,
/// so that `vec(A ρ B) = (Bᵀ ⊗ A) vec(ρ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Liouvillian {
    dim: usize,
    matrix: CMatrix,
}

impl Liouvillian {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            matrix: CMatrix::zeros(dim * dim, dim * dim),
        }
    }

    pub fn from_matrix(dim: usize, matrix: CMatrix) -> Result<Self> {
        if matrix.rows() != dim * dim || matrix.cols() != dim * dim {
            return Err(Error::Dimension {
                expected: format!("{0}x{0} superoperator", dim * dim),
                found: format!("{}x{}", matrix.rows(), matrix.cols()),
            });
        }
        Ok(Self { dim, matrix })
    }

    /// `−i[H, ·]`
    pub fn coherent(h: &CMatrix) -> Result<Self> {
        let dim = h.require_square()?;
        let id = CMatrix::identity(dim);
        let commutator = &id.kron(h) - &h.transpose().kron(&id);
        Self::from_matrix(dim, commutator.scale(Complex64::new(0.0, -1.0)))
    }

    /// Hilbert-space dimension `D`; the matrix is `D² × D²`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// `L ρ` as a matrix.
    pub fn apply(&self, rho: &CMatrix) -> Result<CMatrix> {
        if rho.rows() != self.dim || rho.cols() != self.dim {
            return Err(Error::Dimension {
                expected: format!("{0}x{0} density matrix", self.dim),
                found: format!("{}x{}", rho.rows(), rho.cols()),
            });
        }
        CMatrix::unvectorize(&self.matrix.matvec(&rho.vectorize()), self.dim)
    }

    /// `‖vec(I)† L‖_max`; zero for a trace-preserving generator.
    pub fn trace_defect(&self) -> f64 {
        let d = self.dim;
        let n = d * d;
        (0..n)
            .map(|col| {
                (0..d)
                    .map(|k| self.matrix[(k + d * k, col)])
                    .sum::<Complex64>()
                    .norm()
            })
            .fold(0.0, f64::max)
    }

    pub fn spectrum(&self) -> Result<Vec<Complex64>> {
        eigenvalues(&self.matrix)
    }

    /// Smallest `|Re λ|` among eigenvalues not at the origin.
    pub fn spectral_gap(&self) -> Result<f64> {
        let scale = self.matrix.max_abs().max(f64::MIN_POSITIVE);
        let gap = self
            .spectrum()?
            .iter()
            .filter(|l| l.norm() > 1e-9 * scale)
            .map(|l| l.re.abs())
            .fold(f64::INFINITY, f64::min);
        Ok(gap)
    }
}

impl Add for Liouvillian {
    type Output = Liouvillian;

    fn add(mut self, rhs: Liouvillian) -> Liouvillian {
        assert_eq!(self.dim, rhs.dim, "adding Liouvillians of different dimension");
        self.matrix += &rhs.matrix;
        self
    }
}

/// `rate · (2 A ρ A† − A†A ρ − ρ A†A)`.
pub fn dissipator(op: &CMatrix, rate: f64) -> Result<Liouvillian> {
    let dim = op.require_square()?;
    if !rate.is_finite() || rate < 0.0 {
        return Err(Error::Parameter(format!("dissipation rate must be >= 0, got {rate}")));
    }
    if rate == 0.0 {
        return Ok(Liouvillian::zero(dim));
    }
    let id = CMatrix::identity(dim);
    let ada = &op.adjoint() * op;
    let jump = op.conj().kron(op).scale_real(2.0);
    let left = id.kron(&ada);
    let right = ada.transpose().kron(&id);
    let m = &(&jump - &left) - &right;
    Liouvillian::from_matrix(dim, m.scale_real(rate))
}

//! Two atoms coupled to one truncated cavity mode. Composite index is
//! `atoms * (n_max + 1) + photons`, atoms the slow factor.

use num_complex::Complex64;

use super::basis::{excited_projector, lowering, on_atom, raising, sigma_z, Atom, DIM_ATOMS};
use super::{dissipator, FullModelParams, Liouvillian};
use crate::error::{Error, Result};
use crate::numkit::CMatrix;
use crate::state::DensityMatrix4;

/// Truncated annihilation operator on `n_max + 1` Fock states.
pub fn annihilation(n_max: usize) -> CMatrix {
    let n = n_max + 1;
    let mut a = CMatrix::zeros(n, n);
    for k in 1..n {
        a[(k - 1, k)] = Complex64::new((k as f64).sqrt(), 0.0);
    }
    a
}

fn atoms_op(op: &CMatrix, n_max: usize) -> CMatrix {
    op.kron(&CMatrix::identity(n_max + 1))
}

fn cavity_op(op: &CMatrix) -> CMatrix {
    CMatrix::identity(DIM_ATOMS).kron(op)
}

/// `a†a + Σ_j |1⟩_j⟨1|`, conserved by the atom–cavity Hamiltonian.
pub fn excitation_number(n_max: usize) -> CMatrix {
    let a = annihilation(n_max);
    let photons = cavity_op(&(&a.adjoint() * &a));
    let atoms = &on_atom(&excited_projector(), Atom::One) + &on_atom(&excited_projector(), Atom::Two);
    &photons + &atoms_op(&atoms, n_max)
}

/// `ω a†a + (ω₀/2) Σ σᶻ_j + g Σ (a† σ⁻_j + a σ⁺_j)`.
pub fn full_hamiltonian(p: &FullModelParams) -> Result<CMatrix> {
    p.validate()?;
    let n_max = p.n_max;
    let a = cavity_op(&annihilation(n_max));
    let ad = a.adjoint();
    let mut h = (&ad * &a).scale_real(p.omega_cavity);
    for atom in [Atom::One, Atom::Two] {
        let sz = atoms_op(&on_atom(&sigma_z(), atom), n_max);
        let lower = atoms_op(&on_atom(&lowering(), atom), n_max);
        let raise = atoms_op(&on_atom(&raising(), atom), n_max);
        h += &sz.scale_real(0.5 * p.omega_atom);
        let coupling = &(&ad * &lower) + &(&a * &raise);
        h += &coupling.scale_real(p.g);
    }
    Ok(h)
}

/// Coherent part, cavity field decay at `kappa`, and per-atom thermal channels.
pub fn build_full_liouvillian(p: &FullModelParams) -> Result<Liouvillian> {
    let h = full_hamiltonian(p)?;
    let n_max = p.n_max;
    let mut l = Liouvillian::coherent(&h)?;
    l = l + dissipator(&cavity_op(&annihilation(n_max)), p.kappa)?;
    for (idx, atom) in [Atom::One, Atom::Two].into_iter().enumerate() {
        let down = (p.n_t[idx] + 1.0) * p.gamma[idx];
        let up = p.n_t[idx] * p.gamma[idx];
        l = l + dissipator(&atoms_op(&on_atom(&lowering(), atom), n_max), down)?;
        l = l + dissipator(&atoms_op(&on_atom(&raising(), atom), n_max), up)?;
    }
    Ok(l)
}

/// `ρ_atoms ⊗ |n⟩⟨n|`.
pub fn with_cavity_fock(rho_atoms: &DensityMatrix4, photons: usize, n_max: usize) -> Result<CMatrix> {
    if photons > n_max {
        return Err(Error::Parameter(format!("Fock state {photons} exceeds cutoff {n_max}")));
    }
    let mut fock = CMatrix::zeros(n_max + 1, n_max + 1);
    fock[(photons, photons)] = Complex64::new(1.0, 0.0);
    Ok(rho_atoms.matrix().kron(&fock))
}

/// Traces out the cavity mode.
pub fn partial_trace_cavity(rho_full: &CMatrix, n_max: usize) -> Result<DensityMatrix4> {
    let nc = n_max + 1;
    let dim = DIM_ATOMS * nc;
    if rho_full.rows() != dim || rho_full.cols() != dim {
        return Err(Error::Dimension {
            expected: format!("{dim}x{dim} for n_max = {n_max}"),
            found: format!("{}x{}", rho_full.rows(), rho_full.cols()),
        });
    }
    let reduced = CMatrix::from_fn(DIM_ATOMS, DIM_ATOMS, |i, j| {
        (0..nc).map(|n| rho_full[(i * nc + n, j * nc + n)]).sum()
    });
    DensityMatrix4::new(reduced)
}

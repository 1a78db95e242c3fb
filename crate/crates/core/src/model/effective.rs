use num_complex::Complex64;

use super::basis::{excited_projector, lowering, on_atom, raising, Atom};
use super::{dissipator, EffectiveParams, Liouvillian};
use crate::error::Result;
use crate::numkit::CMatrix;

/// Dispersive Hamiltonian with the cavity in vacuum:
/// `Ω (|1⟩₁⟨1| + |1⟩₂⟨1| + σ⁺₁σ⁻₂ + σ⁻₁σ⁺₂)`.
pub fn effective_hamiltonian(p: &EffectiveParams) -> CMatrix {
    let n1 = on_atom(&excited_projector(), Atom::One);
    let n2 = on_atom(&excited_projector(), Atom::Two);
    let hop = &on_atom(&raising(), Atom::One) * &on_atom(&lowering(), Atom::Two);
    let h = &(&(&n1 + &n2) + &hop) + &hop.adjoint();
    h.scale(Complex64::new(p.omega_eff, 0.0))
}

/// Coherent exchange plus per-atom thermal decay/pumping (and `eta` on atom 2).
///
/// Symmetric parameters give the equal-drive master equation; `gamma[1] = 0`
/// with `eta > 0` gives the single-drive one.
pub fn build_effective_liouvillian(p: &EffectiveParams) -> Result<Liouvillian> {
    p.validate()?;
    let mut l = Liouvillian::coherent(&effective_hamiltonian(p))?;
    for (idx, atom) in [Atom::One, Atom::Two].into_iter().enumerate() {
        l = l + dissipator(&on_atom(&lowering(), atom), p.down_rate(idx))?;
        l = l + dissipator(&on_atom(&raising(), atom), p.up_rate(idx))?;
    }
    Ok(l)
}

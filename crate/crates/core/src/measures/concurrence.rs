use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::basis::{sigma_y, IDX_00, IDX_01, IDX_10, IDX_11};
use crate::numkit::{herm_sqrt, singular_values, CMatrix};
use crate::state::DensityMatrix4;

/// Entries outside the X pattern larger than this disqualify the closed forms.
pub const X_STRUCTURE_TOL: f64 = 1e-10;

fn sigma_yy() -> CMatrix {
    let sy = sigma_y();
    sy.kron(&sy)
}

/// `(σʸ⊗σʸ) ρ* (σʸ⊗σʸ)` with conjugation in the computational basis.
pub fn spin_flip(rho: &DensityMatrix4) -> CMatrix {
    let s = sigma_yy();
    s.matmul(&rho.matrix().conj()).matmul(&s)
}

/// Square roots of the eigenvalues of `√ρ ρ̃ √ρ`, descending.
///
/// They are taken as the singular values of `X = √ρ S √ρ*` (`S = σʸ⊗σʸ`),
/// since `X X† = √ρ ρ̃ √ρ`. This avoids square-rooting eigenvalues that are
/// zero up to rounding, which would blow an `O(ε)` error up to `O(√ε)`.
pub fn spin_flip_lambdas(rho: &DensityMatrix4) -> Result<[f64; 4]> {
    let root = herm_sqrt(rho.matrix())?;
    let x = root.matmul(&sigma_yy()).matmul(&root.conj());
    let sv = singular_values(&x)?;
    Ok([sv[0], sv[1], sv[2], sv[3]])
}

/// Wootters concurrence of an arbitrary two-qubit state.
pub fn concurrence(rho: &DensityMatrix4) -> Result<f64> {
    let l = spin_flip_lambdas(rho)?;
    Ok(concurrence_from_lambdas(&l))
}

pub(crate) fn concurrence_from_lambdas(l: &[f64; 4]) -> f64 {
    (l[0] - l[1] - l[2] - l[3]).clamp(0.0, 1.0)
}

/// Largest modulus among entries outside the diagonal and the `ρ₂₃`/`ρ₃₂` pair.
pub fn x_structure_defect(rho: &DensityMatrix4) -> f64 {
    let m = rho.matrix();
    let mut worst = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            let on_pattern = i == j || (i, j) == (IDX_10, IDX_01) || (i, j) == (IDX_01, IDX_10);
            if !on_pattern {
                worst = worst.max(m[(i, j)].norm());
            }
        }
    }
    worst
}

pub(crate) fn require_x(rho: &DensityMatrix4) -> Result<()> {
    let defect = x_structure_defect(rho);
    if defect > X_STRUCTURE_TOL {
        return Err(Error::NotXState {
            max_off_pattern: defect,
        });
    }
    Ok(())
}

/// `2·max(0, |ρ₂₃| − √(ρ₁₁ρ₄₄))` for states with only diagonal and `ρ₂₃` entries.
pub fn concurrence_x(rho: &DensityMatrix4) -> Result<f64> {
    require_x(rho)?;
    let m = rho.matrix();
    let rho23: Complex64 = m[(IDX_10, IDX_01)];
    let p11 = m[(IDX_11, IDX_11)].re.max(0.0);
    let p44 = m[(IDX_00, IDX_00)].re.max(0.0);
    Ok((2.0 * (rho23.norm() - (p11 * p44).sqrt())).max(0.0))
}

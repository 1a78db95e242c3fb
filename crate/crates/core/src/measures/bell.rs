use num_complex::Complex64;

use super::concurrence::require_x;
use crate::error::{Error, Result};
use crate::model::basis::{paulis, IDX_00, IDX_01, IDX_10, IDX_11};
use crate::numkit::{herm_eigs, CMatrix};
use crate::state::DensityMatrix4;

/// Largest tolerated imaginary part of a Pauli correlator.
pub const CORRELATOR_IMAG_TOL: f64 = 1e-10;

/// `T[n][m] = Tr(ρ σₙ⊗σₘ)` with `n, m ∈ {x, y, z}`.
pub fn correlation_matrix(rho: &DensityMatrix4) -> Result<[[f64; 3]; 3]> {
    let s = paulis();
    let mut t = [[0.0; 3]; 3];
    for (n, sn) in s.iter().enumerate() {
        for (m, sm) in s.iter().enumerate() {
            let v: Complex64 = rho.matrix().matmul(&sn.kron(sm)).trace();
            if v.im.abs() > CORRELATOR_IMAG_TOL {
                return Err(Error::State(format!(
                    "correlator T[{n}][{m}] has imaginary part {:e}",
                    v.im
                )));
            }
            t[n][m] = v.re;
        }
    }
    Ok(t)
}

/// Eigenvalues of `T Tᵀ`, descending and clamped at zero.
pub fn tt_eigenvalues(t: &[[f64; 3]; 3]) -> Result<[f64; 3]> {
    let ttt = CMatrix::from_fn(3, 3, |i, j| {
        Complex64::new((0..3).map(|k| t[i][k] * t[j][k]).sum(), 0.0)
    });
    let v = herm_eigs(&ttt)?.values;
    Ok([v[2].max(0.0), v[1].max(0.0), v[0].max(0.0)])
}

pub(crate) fn bell_from_tt(eigs: &[f64; 3]) -> f64 {
    2.0 * (eigs[0] + eigs[1]).sqrt()
}

/// Maximal CHSH expectation `2√(u₁ + u₂)` over all measurement settings,
/// `u₁ ≥ u₂` the two largest eigenvalues of `T Tᵀ`.
pub fn bell_max(rho: &DensityMatrix4) -> Result<f64> {
    let t = correlation_matrix(rho)?;
    Ok(bell_from_tt(&tt_eigenvalues(&t)?))
}

/// Closed form of [`bell_max`] for states with only diagonal and `ρ₂₃` entries.
pub fn bell_max_xform(rho: &DensityMatrix4) -> Result<f64> {
    require_x(rho)?;
    let m = rho.matrix();
    let c = 4.0 * m[(IDX_10, IDX_01)].norm_sqr();
    let d = m[(IDX_11, IDX_11)].re + m[(IDX_00, IDX_00)].re
        - m[(IDX_10, IDX_10)].re
        - m[(IDX_01, IDX_01)].re;
    Ok(2.0 * (c + c.max(d * d)).sqrt())
}

/// Range of the maximal CHSH value at fixed concurrence `c`: the upper bound
/// `2√(1+c²)` and, for `c > 1/√2`, the lower bound `2√2·c`.
pub fn verstraete_bounds(c: f64) -> Result<(f64, Option<f64>)> {
    if !(0.0..=1.0).contains(&c) {
        return Err(Error::Parameter(format!("concurrence must lie in [0, 1], got {c}")));
    }
    let upper = 2.0 * (1.0 + c * c).sqrt();
    let lower = (c > std::f64::consts::FRAC_1_SQRT_2).then_some(2.0 * std::f64::consts::SQRT_2 * c);
    Ok((upper, lower))
}

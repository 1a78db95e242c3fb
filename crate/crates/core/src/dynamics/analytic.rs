//! Closed-form solutions of the dispersive model.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::EffectiveParams;
use crate::state::DensityMatrix4;

/// State at time `t` for equal thermal driving on both atoms, starting from `|1⟩₁|0⟩₂`.
pub fn analytic_state_symmetric(p: &EffectiveParams, t: f64) -> Result<DensityMatrix4> {
    if !p.is_symmetric() {
        return Err(Error::Mode(
            "closed-form evolution needs equal rates on both atoms and eta = 0".into(),
        ));
    }
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::Parameter(format!("time must be finite and >= 0, got {t}")));
    }
    let (pop, rho23) = symmetric_entries(p.n_t[0], p.gamma[0], p.omega_eff, t);
    DensityMatrix4::from_x_entries(pop, rho23)
}

fn symmetric_entries(n: f64, gamma: f64, omega: f64, t: f64) -> ([f64; 4], Complex64) {
    let fast = (-(8.0 * n + 4.0) * gamma * t).exp();
    let slow = (-(4.0 * n + 2.0) * gamma * t).exp();
    let q = (2.0 * n + 1.0).powi(2);
    let (sin, cos) = (2.0 * omega * t).sin_cos();

    let r11 = n / q * (n + slow - (n + 1.0) * fast);
    let shared = (n * n + n) / q * (1.0 + fast);
    let r22 = shared + 0.5 * (1.0 / q + cos) * slow;
    let r33 = shared + 0.5 * (1.0 / q - cos) * slow;
    let r44 = (n + 1.0) / q * (n + 1.0 - slow - n * fast);
    let r23 = Complex64::new(0.0, 0.5 * slow * sin);
    ([r11, r22, r33, r44], r23)
}

/// Steady state when only atom 1 is thermally driven and atom 2 decays at `eta`.
pub fn analytic_steady_asymmetric(p: &EffectiveParams) -> Result<DensityMatrix4> {
    if !p.is_asymmetric() {
        return Err(Error::Mode(
            "closed-form steady state needs atom 2 free of thermal coupling (gamma2 = 0)".into(),
        ));
    }
    let g = p.gamma[0];
    let n = p.n_t[0];
    let eta = p.eta;
    let w = p.omega_eff;

    let a = g + eta + 2.0 * n * g;
    let b = w * w + g * eta + 2.0 * n * g * eta;
    if a == 0.0 || b == 0.0 {
        return Err(Error::DegenerateSteadyState(format!(
            "steady-state denominators vanish (Γ+η+2n_TΓ = {a}, Ω²+Γη+2n_TΓη = {b})"
        )));
    }
    let mid = g + eta + n * g;
    let denom = a * a * b;

    let r11 = w * w * g * g * n * n / denom;
    let r22 = n * g * (eta * a * a + w * w * mid) / denom;
    let r33 = w * w * n * g * mid / denom;
    let r44 = (g * eta * (1.0 + n) * a * a + w * w * mid * mid) / denom;
    let r23 = Complex64::new(0.0, n * w * g * eta / (a * b));
    DensityMatrix4::from_x_entries([r11, r22, r33, r44], r23)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn symmetric_starts_in_10() {
        for (n, g, w) in [(0.0, 0.01, 0.2), (0.3, 0.1, 0.5), (2.0, 0.05, 1.0)] {
            let p = EffectiveParams::symmetric(w, g, n).unwrap();
            let rho = analytic_state_symmetric(&p, 0.0).unwrap();
            let mut expected = crate::numkit::CMatrix::zeros(4, 4);
            expected[(1, 1)] = Complex64::new(1.0, 0.0);
            assert!(rho.matrix().max_abs_diff(&expected) < 1e-15);
        }
    }

    #[test]
    fn symmetric_quarter_period_zero_temperature() {
        let p = EffectiveParams::symmetric(0.2, 0.01, 0.0).unwrap();
        let t = PI / (4.0 * 0.2);
        let rho = analytic_state_symmetric(&p, t).unwrap();
        // (i/2) e^{-2Γt} at 2Ωt = π/2
        assert!(close(rho.entry(2, 3).im, 0.46223262518812793, 1e-15));
        assert!(close(rho.entry(2, 3).re, 0.0, 1e-15));
        assert_eq!(rho.entry(1, 1).re, 0.0);
    }

    #[test]
    fn symmetric_long_time_limit() {
        let p = EffectiveParams::symmetric(0.2, 0.01, 1.0).unwrap();
        let rho = analytic_state_symmetric(&p, 1e5).unwrap();
        for (k, want) in [1.0 / 9.0, 2.0 / 9.0, 2.0 / 9.0, 4.0 / 9.0].iter().enumerate() {
            assert!(close(rho.entry(k + 1, k + 1).re, *want, 1e-15));
        }
        assert!(rho.entry(2, 3).norm() < 1e-15);
    }

    #[test]
    fn symmetric_rejects_other_modes() {
        let p = EffectiveParams::asymmetric(0.2, 0.1, 1.0, 0.5).unwrap();
        assert!(matches!(analytic_state_symmetric(&p, 1.0), Err(Error::Mode(_))));
        let p = EffectiveParams::symmetric(0.2, 0.1, 1.0).unwrap();
        assert!(analytic_state_symmetric(&p, -1.0).is_err());
    }

    #[test]
    fn steady_zero_temperature_is_ground() {
        let p = EffectiveParams::asymmetric(0.2, 0.1, 0.0, 0.5).unwrap();
        let rho = analytic_steady_asymmetric(&p).unwrap();
        assert!(close(rho.entry(4, 4).re, 1.0, 1e-15));
        for (i, j) in [(1, 1), (2, 2), (3, 3), (2, 3)] {
            assert_eq!(rho.entry(i, j).norm(), 0.0);
        }
    }

    #[test]
    fn steady_reference_point() {
        // Reference values from an independent 30-digit substitution.
        let p = EffectiveParams::asymmetric(0.2, 0.1, 2.0, 0.5).unwrap();
        let rho = analytic_steady_asymmetric(&p).unwrap();
        let want = [
            0.0055172413793103448,
            0.36689655172413793,
            0.022068965517241379,
            0.60551724137931034,
        ];
        for (k, w) in want.iter().enumerate() {
            assert!(close(rho.entry(k + 1, k + 1).re, *w, 1e-15));
        }
        assert!(close(rho.entry(2, 3).im, 0.06896551724137931, 1e-15));
        assert!(close(rho.matrix().trace().re, 1.0, 1e-12));
    }

    #[test]
    fn steady_degenerate_denominators() {
        let p = EffectiveParams::asymmetric(0.0, 0.0, 1.0, 0.0).unwrap();
        assert!(matches!(analytic_steady_asymmetric(&p), Err(Error::DegenerateSteadyState(_))));
        let p = EffectiveParams::asymmetric(0.3, 0.0, 1.0, 0.0).unwrap();
        assert!(matches!(analytic_steady_asymmetric(&p), Err(Error::DegenerateSteadyState(_))));
    }

    #[test]
    fn steady_rejects_symmetric_mode() {
        let p = EffectiveParams::symmetric(0.2, 0.1, 1.0).unwrap();
        assert!(matches!(analytic_steady_asymmetric(&p), Err(Error::Mode(_))));
    }
}

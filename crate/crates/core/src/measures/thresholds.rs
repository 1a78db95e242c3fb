use crate::error::{Error, Result};
use crate::model::EffectiveParams;

/// Coupling below which the asymmetric steady state is entangled:
/// `(Γ+η+2nΓ)·√(η² − Γη − nΓη) / (Γ+η+nΓ)`.
///
/// `None` when the radicand is negative (no entangled window at any coupling).
/// At a radicand of exactly zero the window has closed and the result is `Some(0)`.
pub fn omega_threshold(gamma: f64, eta: f64, n_t: f64) -> Option<f64> {
    let radicand = eta * eta - gamma * eta - n_t * gamma * eta;
    let denom = gamma + eta + n_t * gamma;
    if !(radicand >= 0.0) || !(denom > 0.0) {
        return None;
    }
    Some((gamma + eta + 2.0 * n_t * gamma) * radicand.sqrt() / denom)
}

/// Thermal photon number above which the steady state is separable: `η/Γ − 1`.
pub fn nt_threshold(gamma: f64, eta: f64) -> Result<f64> {
    if !(gamma > 0.0) {
        return Err(Error::Parameter(format!("threshold needs gamma > 0, got {gamma}")));
    }
    Ok(eta / gamma - 1.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdReport {
    pub omega_c: Option<f64>,
    pub n_tc: Option<f64>,
    /// `0 < Ω < Ω_c` and `0 < n_T < n_Tc`.
    pub entangled_predicate: bool,
}

/// Thresholds for the thermally driven atom 1 of an asymmetric parameter set.
pub fn threshold_report(p: &EffectiveParams) -> ThresholdReport {
    let (gamma, n_t, omega) = (p.gamma[0], p.n_t[0], p.omega_eff);
    let omega_c = omega_threshold(gamma, p.eta, n_t);
    let n_tc = nt_threshold(gamma, p.eta).ok();
    let entangled_predicate = omega > 0.0
        && omega_c.is_some_and(|c| omega < c)
        && n_t > 0.0
        && n_tc.is_some_and(|c| n_t < c);
    ThresholdReport {
        omega_c,
        n_tc,
        entangled_predicate,
    }
}

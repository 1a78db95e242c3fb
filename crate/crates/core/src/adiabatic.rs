//! Checks the dispersive two-atom model against the atoms + cavity model it
//! approximates, with the cavity starting in vacuum.

use crate::dynamics::trajectory;
use crate::error::{Error, Result};
use crate::model::{
    build_effective_liouvillian, build_full_liouvillian, partial_trace_cavity, with_cavity_fock,
    FullModelParams,
};
use crate::state::{DensityMatrix4, ProductState};

/// Largest tolerated per-entry gap between reduced full and effective states.
pub const ADIABATIC_TOL: f64 = 5e-2;
/// Largest tolerated change of the maximal gap when the photon cutoff is raised by one.
pub const CUTOFF_TOL: f64 = 1e-3;

/// Labels of the entries tracked per time: `ρ₁₁, ρ₂₂, ρ₃₃, ρ₄₄, ρ₂₃`.
pub const TRACKED_ENTRIES: [(usize, usize); 5] = [(1, 1), (2, 2), (3, 3), (4, 4), (2, 3)];

/// Full-model and dispersive states on a shared time grid.
#[derive(Debug, Clone)]
pub struct AdiabaticComparison {
    pub times: Vec<f64>,
    pub reduced: Vec<DensityMatrix4>,
    pub effective: Vec<DensityMatrix4>,
    /// `|Δρ|` for each of [`TRACKED_ENTRIES`] at each time.
    pub entry_gaps: Vec<[f64; 5]>,
    /// Largest `|Δρ_ij|` over all sixteen entries, per time.
    pub max_entry_gap: Vec<f64>,
}

impl AdiabaticComparison {
    pub fn max_gap(&self) -> f64 {
        self.max_entry_gap.iter().copied().fold(0.0, f64::max)
    }
}

pub fn compare_full_effective(
    p: &FullModelParams,
    initial: ProductState,
    grid: &[f64],
) -> Result<AdiabaticComparison> {
    let atoms0 = DensityMatrix4::product(initial);
    let full0 = crate::state::DensityMatrix::new(with_cavity_fock(&atoms0, 0, p.n_max)?)?;
    let full = trajectory(&build_full_liouvillian(p)?, &full0, grid)?;
    let eff = trajectory(&build_effective_liouvillian(&p.effective()?)?, &atoms0.into(), grid)?;

    let reduced = full
        .states
        .iter()
        .map(|s| partial_trace_cavity(s.matrix(), p.n_max))
        .collect::<Result<Vec<_>>>()?;
    let effective = eff
        .states
        .into_iter()
        .map(DensityMatrix4::try_from)
        .collect::<Result<Vec<_>>>()?;

    let entry_gaps = reduced
        .iter()
        .zip(&effective)
        .map(|(r, e)| TRACKED_ENTRIES.map(|(i, j)| (r.entry(i, j) - e.entry(i, j)).norm()))
        .collect();
    let max_entry_gap = reduced
        .iter()
        .zip(&effective)
        .map(|(r, e)| r.matrix().max_abs_diff(e.matrix()))
        .collect();
    Ok(AdiabaticComparison {
        times: grid.to_vec(),
        reduced,
        effective,
        entry_gaps,
        max_entry_gap,
    })
}

/// Outcome of [`validate_adiabatic`].
#[derive(Debug, Clone)]
pub struct AdiabaticValidation {
    pub comparison: AdiabaticComparison,
    pub max_gap: f64,
    /// Maximal gap with the photon cutoff raised by one.
    pub raised_cutoff_max_gap: f64,
    pub cutoff_delta: f64,
    pub detuning_ratio: f64,
    pub large_detuning: bool,
    pub passed: bool,
}

/// Compares the two models, then repeats at `n_max + 1` to check the cutoff.
///
/// A small detuning ratio is reported through `large_detuning` rather than
/// rejected, so callers can flag it.
pub fn validate_adiabatic(
    p: &FullModelParams,
    initial: ProductState,
    grid: &[f64],
) -> Result<AdiabaticValidation> {
    p.validate()?;
    let comparison = compare_full_effective(p, initial, grid)?;
    let raised = FullModelParams {
        n_max: p.n_max + 1,
        ..*p
    };
    let raised_cutoff_max_gap = compare_full_effective(&raised, initial, grid)?.max_gap();
    let max_gap = comparison.max_gap();
    if !max_gap.is_finite() || !raised_cutoff_max_gap.is_finite() {
        return Err(Error::Range("non-finite gap between models".into()));
    }
    let cutoff_delta = (max_gap - raised_cutoff_max_gap).abs();
    Ok(AdiabaticValidation {
        comparison,
        max_gap,
        raised_cutoff_max_gap,
        cutoff_delta,
        detuning_ratio: p.detuning_ratio(),
        large_detuning: p.is_large_detuning(),
        passed: max_gap <= ADIABATIC_TOL && cutoff_delta < CUTOFF_TOL,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(g: f64) -> FullModelParams {
        FullModelParams {
            omega_cavity: 10.0,
            omega_atom: 15.0,
            g,
            kappa: 0.0,
            n_max: 2,
            gamma: [0.01; 2],
            n_t: [0.0; 2],
        }
    }

    #[test]
    fn uncoupled_models_coincide() {
        let grid: Vec<f64> = (0..=20).map(|k| 5.0 * k as f64).collect();
        let v = validate_adiabatic(&params(0.0), ProductState::AtomOneExcited, &grid).unwrap();
        assert!(v.max_gap < 1e-12, "{}", v.max_gap);
        assert!(v.passed && v.large_detuning);
    }

    #[test]
    fn dispersive_regime_passes() {
        let grid: Vec<f64> = (0..=100).map(|k| 5.0 * k as f64).collect();
        let v = validate_adiabatic(&params(0.1), ProductState::AtomOneExcited, &grid).unwrap();
        assert!(v.passed, "gap {} cutoff delta {}", v.max_gap, v.cutoff_delta);
    }

    #[test]
    fn lossless_exchange_is_tracked() {
        // Half a swap period at Ω = 0.002 moves the excitation to atom 2.
        let p = FullModelParams {
            gamma: [0.0; 2],
            ..params(0.1)
        };
        let grid: Vec<f64> = (0..=80).map(|k| 10.0 * k as f64).collect();
        let v = validate_adiabatic(&p, ProductState::AtomOneExcited, &grid).unwrap();
        assert!(v.max_gap < 1e-2, "{}", v.max_gap);
        let peak = v.comparison.reduced.iter().map(|s| s.entry(3, 3).re).fold(0.0, f64::max);
        assert!(peak > 0.99, "{peak}");
    }

    #[test]
    fn near_resonance_is_flagged() {
        let p = FullModelParams {
            omega_atom: 10.5,
            ..params(0.1)
        };
        let grid = [0.0, 10.0, 20.0];
        let v = validate_adiabatic(&p, ProductState::AtomOneExcited, &grid).unwrap();
        assert!(!v.large_detuning);
    }
}

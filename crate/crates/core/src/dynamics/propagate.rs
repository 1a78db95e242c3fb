use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::Liouvillian;
use crate::numkit::{expm, null_vector, CMatrix};
use crate::state::DensityMatrix;

/// Propagated states may dip this far below zero before we call it a bug.
pub const POSITIVITY_FLOOR: f64 = -1e-8;

/// States sampled along a time grid.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<DensityMatrix>,
}

fn check_dims(l: &Liouvillian, rho: &DensityMatrix) -> Result<()> {
    if rho.dim() != l.dim() {
        return Err(Error::Dimension {
            expected: format!("{0}x{0} state", l.dim()),
            found: format!("{0}x{0}", rho.dim()),
        });
    }
    Ok(())
}

fn to_state(v: &[Complex64], dim: usize) -> Result<DensityMatrix> {
    let m = CMatrix::unvectorize(v, dim)?.hermitian_part();
    DensityMatrix::with_eigenvalue_floor(m.clone(), POSITIVITY_FLOOR).map_err(|err| match err {
        Error::State(_) => match crate::numkit::herm_eigs(&m) {
            Ok(eig) if eig.values[0] < POSITIVITY_FLOOR => Error::IntegrationAccuracy {
                min_eigenvalue: eig.values[0],
            },
            _ => err,
        },
        other => other,
    })
}

/// `unvec(exp(L t) vec(ρ₀))`.
pub fn propagate(l: &Liouvillian, rho0: &DensityMatrix, t: f64) -> Result<DensityMatrix> {
    check_dims(l, rho0)?;
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::Parameter(format!("time must be finite and >= 0, got {t}")));
    }
    if t == 0.0 {
        return Ok(rho0.clone());
    }
    let p = expm(l.matrix(), t)?;
    to_state(&p.matvec(&rho0.matrix().vectorize()), l.dim())
}

/// Steps `exp(L Δtᵢ)` cumulatively along `grid`, reusing the propagator
/// while the step stays the same.
pub fn trajectory(l: &Liouvillian, rho0: &DensityMatrix, grid: &[f64]) -> Result<Trajectory> {
    check_dims(l, rho0)?;
    let Some(&first) = grid.first() else {
        return Err(Error::Parameter("time grid is empty".into()));
    };
    if !(first >= 0.0) || grid.iter().any(|t| !t.is_finite()) {
        return Err(Error::Parameter("time grid must be finite and start at t >= 0".into()));
    }
    if grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::Parameter("time grid must be ascending".into()));
    }

    let dim = l.dim();
    let mut x = if first == 0.0 {
        rho0.matrix().vectorize()
    } else {
        expm(l.matrix(), first)?.matvec(&rho0.matrix().vectorize())
    };
    let mut states = Vec::with_capacity(grid.len());
    states.push(if first == 0.0 { rho0.clone() } else { to_state(&x, dim)? });

    let mut cached: Option<(f64, CMatrix)> = None;
    for w in grid.windows(2) {
        let dt = w[1] - w[0];
        if dt == 0.0 {
            states.push(states.last().expect("non-empty").clone());
            continue;
        }
        let reuse = matches!(&cached, Some((h, _)) if (dt - h).abs() <= 1e-12 * w[1].abs().max(1.0));
        if !reuse {
            cached = Some((dt, expm(l.matrix(), dt)?));
        }
        let (_, step) = cached.as_ref().expect("propagator cached above");
        x = step.matvec(&x);
        states.push(to_state(&x, dim)?);
    }
    Ok(Trajectory {
        times: grid.to_vec(),
        states,
    })
}

/// Unit-trace element of the kernel of `L`.
pub fn numeric_steady(l: &Liouvillian) -> Result<DensityMatrix> {
    let dim = l.dim();
    let mut trace_row = vec![Complex64::new(0.0, 0.0); dim * dim];
    for k in 0..dim {
        trace_row[k + dim * k] = Complex64::new(1.0, 0.0);
    }
    let x = null_vector(l.matrix(), &trace_row, Complex64::new(1.0, 0.0))?;
    to_state(&x, dim)
}

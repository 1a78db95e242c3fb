use noisy_cavity::dynamics::{
    analytic_state_symmetric, numeric_steady, propagate, trajectory, DensityMatrix, DensityMatrix4,
    ProductState,
};
use noisy_cavity::measures::{concurrence, concurrence_x, x_structure_defect};
use noisy_cavity::model::{build_effective_liouvillian, EffectiveParams, Liouvillian};
use noisy_cavity::numkit::CMatrix;
use num_complex::Complex64;

fn parameter_sets() -> Vec<EffectiveParams> {
    vec![
        EffectiveParams::symmetric(0.2, 0.01, 0.0).unwrap(),
        EffectiveParams::symmetric(0.2, 0.01, 1.0).unwrap(),
        EffectiveParams::symmetric(0.5, 0.1, 0.3).unwrap(),
        EffectiveParams::asymmetric(0.2, 0.1, 2.0, 0.5).unwrap(),
        EffectiveParams::asymmetric(0.2, 0.01, 0.5, 0.01).unwrap(),
        EffectiveParams::new(0.3, [0.02, 0.05], [0.4, 1.5], 0.1).unwrap(),
    ]
}

fn product(s: ProductState) -> DensityMatrix {
    DensityMatrix4::product(s).into()
}

/// Classical RK4 on `dx/dt = L x`.
fn rk4(l: &Liouvillian, x0: &[Complex64], t: f64, h: f64) -> Vec<Complex64> {
    let steps = (t / h).round() as usize;
    let m = l.matrix();
    let axpy = |x: &[Complex64], k: &[Complex64], a: f64| -> Vec<Complex64> {
        x.iter().zip(k).map(|(x, k)| x + k * a).collect()
    };
    let mut x = x0.to_vec();
    for _ in 0..steps {
        let k1 = m.matvec(&x);
        let k2 = m.matvec(&axpy(&x, &k1, h / 2.0));
        let k3 = m.matvec(&axpy(&x, &k2, h / 2.0));
        let k4 = m.matvec(&axpy(&x, &k3, h));
        for i in 0..x.len() {
            x[i] += (k1[i] + k2[i] * 2.0 + k3[i] * 2.0 + k4[i]) * (h / 6.0);
        }
    }
    x
}

#[test]
fn exponential_matches_runge_kutta() {
    for p in parameter_sets() {
        let l = build_effective_liouvillian(&p).unwrap();
        for s in ProductState::ALL {
            let rho0 = product(s);
            let t = 2.0;
            let oracle = rk4(&l, &rho0.matrix().vectorize(), t, 1e-4);
            let oracle = CMatrix::unvectorize(&oracle, 4).unwrap();
            let got = propagate(&l, &rho0, t).unwrap();
            assert!(got.matrix().max_abs_diff(&oracle) < 1e-8, "{p:?} {s}");
        }
    }
}

#[test]
fn semigroup_property() {
    for p in parameter_sets() {
        let l = build_effective_liouvillian(&p).unwrap();
        for s in ProductState::ALL {
            let rho0 = product(s);
            for (t1, t2) in [(0.5, 1.5), (3.0, 17.0), (40.0, 60.0)] {
                let split = propagate(&l, &propagate(&l, &rho0, t1).unwrap(), t2).unwrap();
                let joint = propagate(&l, &rho0, t1 + t2).unwrap();
                assert!(split.matrix().max_abs_diff(joint.matrix()) < 1e-9);
            }
        }
    }
}

#[test]
fn trace_hermiticity_and_positivity_are_preserved() {
    let grid: Vec<f64> = (0..=200).map(|k| 0.5 * k as f64).collect();
    for p in parameter_sets() {
        let l = build_effective_liouvillian(&p).unwrap();
        assert!(l.trace_defect() < 1e-14);
        for s in ProductState::ALL {
            let tr = trajectory(&l, &product(s), &grid).unwrap();
            for rho in &tr.states {
                assert!((rho.matrix().trace().re - 1.0).abs() < 1e-10);
                assert_eq!(rho.matrix().hermiticity_defect(), 0.0);
                assert!(rho.min_eigenvalue().unwrap() >= -1e-9);
            }
        }
    }
}

#[test]
fn long_time_limit_is_the_kernel() {
    for p in parameter_sets() {
        let l = build_effective_liouvillian(&p).unwrap();
        let gap = l.spectral_gap().unwrap();
        assert!(gap > 0.0 && gap.is_finite());
        let steady = numeric_steady(&l).unwrap();
        for s in ProductState::ALL {
            let late = propagate(&l, &product(s), 50.0 / gap).unwrap();
            assert!(late.matrix().max_abs_diff(steady.matrix()) < 1e-6, "{p:?} {s}");
        }
    }
}

#[test]
fn product_states_stay_in_the_x_family() {
    let grid: Vec<f64> = (0..=100).map(|k| 1.0 * k as f64).collect();
    for p in parameter_sets() {
        let l = build_effective_liouvillian(&p).unwrap();
        for s in ProductState::ALL {
            let tr = trajectory(&l, &product(s), &grid).unwrap();
            for rho in tr.states {
                let rho = DensityMatrix4::try_from(rho).unwrap();
                assert!(x_structure_defect(&rho) <= 1e-12);
                let gap = (concurrence(&rho).unwrap() - concurrence_x(&rho).unwrap()).abs();
                assert!(gap < 1e-10, "{p:?} {s}: {gap:e}");
            }
        }
    }
}

#[test]
fn trajectory_tracks_closed_form() {
    let grid: Vec<f64> = (0..=200).map(|k| 0.5 * k as f64).collect();
    let p = EffectiveParams::symmetric(0.2, 0.01, 0.0).unwrap();
    let l = build_effective_liouvillian(&p).unwrap();
    let tr = trajectory(&l, &product(ProductState::AtomOneExcited), &grid).unwrap();
    for (t, rho) in tr.times.iter().zip(&tr.states) {
        let want = analytic_state_symmetric(&p, *t).unwrap();
        assert!(rho.matrix().max_abs_diff(want.matrix()) < 1e-8, "t = {t}");
    }
}

#[test]
fn closed_form_is_a_valid_state_everywhere() {
    for n in [0.0, 0.1, 0.3, 1.0, 2.0, 10.0] {
        for gamma in [0.0, 0.01, 0.1] {
            let p = EffectiveParams::symmetric(0.2, gamma, n).unwrap();
            for k in 0..=100 {
                let rho = analytic_state_symmetric(&p, 3.7 * k as f64).unwrap();
                assert!((rho.matrix().trace().re - 1.0).abs() < 1e-12);
                assert!(rho.min_eigenvalue().unwrap() >= -1e-9);
            }
        }
    }
}

#[test]
fn symmetric_spectrum_contains_decay_rates() {
    for gamma in [0.01, 0.1] {
        for n in [0.0, 0.3, 1.0, 2.0] {
            let p = EffectiveParams::symmetric(0.2, gamma, n).unwrap();
            let spec = build_effective_liouvillian(&p).unwrap().spectrum().unwrap();
            for rate in [(4.0 * n + 2.0) * gamma, (8.0 * n + 4.0) * gamma] {
                let best = spec.iter().map(|l| (l.re + rate).abs()).fold(f64::INFINITY, f64::min);
                assert!(best < 1e-9, "rate {rate}: {best:e}");
            }
        }
    }
}

use noisy_cavity::engine::{Named, Registry, SteadyStateEngine};
use noisy_cavity::measures::{nt_threshold, omega_threshold};
use noisy_cavity::model::EffectiveParams;

use super::{par_map, steady_point, Command, Report, SPOT_CHECK_STRIDE};
use crate::config::{Config, KeySpec};
use crate::error::CliError;
use crate::output::{fmt_float, CsvOutput};

pub struct Region;

const KEYS: &[KeySpec] = &[
    KeySpec::new("gamma", "0.1", "decay rate of atom 1"),
    KeySpec::new("eta", "0.5", "decay rate of atom 2"),
    KeySpec::new("n_t", "0:6:101", "thermal photon number axis"),
    KeySpec::new("omega", "0:1:101", "effective coupling axis"),
];

impl Named for Region {
    fn name(&self) -> &'static str {
        "region"
    }
}

impl Command for Region {
    fn about(&self) -> &'static str {
        "Map of where the steady state is entangled, with the coupling threshold"
    }

    fn keys(&self) -> &'static [KeySpec] {
        KEYS
    }

    fn run(&self, cfg: &Config, out: &mut CsvOutput) -> Result<Report, CliError> {
        let gamma = cfg.scalar("gamma")?;
        let eta = cfg.scalar("eta")?;
        let n_axis = cfg.value("n_t")?.points();
        let omega_axis = cfg.value("omega")?.points();
        let points: Vec<(usize, f64, f64)> = n_axis
            .iter()
            .flat_map(|&n| omega_axis.iter().map(move |&w| (n, w)))
            .enumerate()
            .map(|(i, (n, w))| (i, n, w))
            .collect();

        let engines = Registry::<dyn SteadyStateEngine>::with_defaults();
        let results = par_map(&points, |&(idx, n_t, omega)| {
            let p = EffectiveParams::asymmetric(omega, gamma, n_t, eta)?;
            let pt = steady_point(&engines, &p, idx % SPOT_CHECK_STRIDE == 0)?;
            Ok((pt.concurrence > 0.0, omega_threshold(gamma, eta, n_t)))
        })?;

        if let Ok(n_tc) = nt_threshold(gamma, eta) {
            out.comment(&format!("n_tc = {}", fmt_float(n_tc)));
        }
        out.header(&["n_t", "omega", "entangled", "omega_c"]);
        let mut entangled = 0;
        for ((_, n_t, omega), (inside, omega_c)) in points.iter().zip(&results) {
            entangled += usize::from(*inside);
            out.row([
                fmt_float(*n_t),
                fmt_float(*omega),
                if *inside { "1" } else { "0" }.to_string(),
                omega_c.map(fmt_float).unwrap_or_default(),
            ]);
        }
        Ok(Report::ok(format!(
            "region: {entangled} of {} points entangled",
            points.len()
        )))
    }
}

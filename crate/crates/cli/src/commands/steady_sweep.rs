use noisy_cavity::engine::{Named, Registry, SteadyStateEngine};
use noisy_cavity::model::EffectiveParams;

use super::{par_map, steady_point, Command, Report, SPOT_CHECK_STRIDE};
use crate::config::{Config, KeySpec};
use crate::error::CliError;
use crate::output::{fmt_float, CsvOutput};

pub struct SteadySweep;

const KEYS: &[KeySpec] = &[
    KeySpec::new("n_t", "0:6:101", "thermal photon number of atom 1"),
    KeySpec::new("eta", "0.5", "decay rate of atom 2"),
    KeySpec::new("gamma", "0.1", "decay rate of atom 1"),
    KeySpec::new("omega", "0.2", "effective coupling g^2/Delta"),
];

/// Parameter names in loop order, outermost first.
const AXES: [&str; 4] = ["n_t", "eta", "gamma", "omega"];

impl Named for SteadySweep {
    fn name(&self) -> &'static str {
        "steady-sweep"
    }
}

impl Command for SteadySweep {
    fn about(&self) -> &'static str {
        "Steady-state concurrence and CHSH value over one or two swept parameters"
    }

    fn keys(&self) -> &'static [KeySpec] {
        KEYS
    }

    fn run(&self, cfg: &Config, out: &mut CsvOutput) -> Result<Report, CliError> {
        let mut fixed = [0.0; 4];
        let mut swept: Vec<(usize, Vec<f64>)> = Vec::new();
        for (k, name) in AXES.iter().enumerate() {
            let v = cfg.value(name)?;
            if v.is_sweep() {
                swept.push((k, v.points()));
            } else {
                fixed[k] = v.points()[0];
            }
        }
        if !(1..=2).contains(&swept.len()) {
            return Err(CliError::Usage(format!(
                "steady-sweep needs one or two swept parameters among {}, got {}",
                AXES.join(", "),
                swept.len()
            )));
        }

        let mut points: Vec<[f64; 4]> = Vec::new();
        let inner = swept.get(1).map_or(vec![f64::NAN], |(_, v)| v.clone());
        for &a in &swept[0].1 {
            for &b in &inner {
                let mut p = fixed;
                p[swept[0].0] = a;
                if let Some((k, _)) = swept.get(1) {
                    p[*k] = b;
                }
                points.push(p);
            }
        }

        let engines = Registry::<dyn SteadyStateEngine>::with_defaults();
        let indexed: Vec<(usize, [f64; 4])> = points.into_iter().enumerate().collect();
        let results = par_map(&indexed, |(idx, v)| {
            let p = EffectiveParams::asymmetric(v[3], v[2], v[0], v[1])?;
            let pt = steady_point(&engines, &p, idx % SPOT_CHECK_STRIDE == 0)?;
            Ok((pt.concurrence, pt.bell))
        })?;

        let mut header: Vec<String> = swept.iter().map(|(k, _)| AXES[*k].to_string()).collect();
        header.extend(["C_st".to_string(), "B_st".to_string()]);
        out.header(&header);
        for ((_, v), (c, b)) in indexed.iter().zip(&results) {
            let mut row: Vec<String> = swept.iter().map(|(k, _)| fmt_float(v[*k])).collect();
            row.push(fmt_float(*c));
            row.push(fmt_float(*b));
            out.row(row);
        }
        let (best, c_max) = results
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, (i, r)| if r.0 > acc.1 { (i, r.0) } else { acc });
        let at: Vec<String> = swept
            .iter()
            .map(|(k, _)| format!("{} = {}", AXES[*k], indexed[best].1[*k]))
            .collect();
        Ok(Report::ok(format!(
            "steady-sweep: {} points, max C_st {c_max:.6} at {}",
            results.len(),
            at.join(", ")
        )))
    }
}

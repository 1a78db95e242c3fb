use noisy_cavity::dynamics::ProductState;
use noisy_cavity::engine::{EvolutionEngine, EvolutionProblem, Named, Registry};
use noisy_cavity::measures::{bell_max, concurrence};
use noisy_cavity::model::EffectiveParams;

use super::{par_map, Command, Report};
use crate::config::{Config, KeySpec};
use crate::error::CliError;
use crate::output::{fmt_float, CsvOutput};

pub struct Evolve;

const KEYS: &[KeySpec] = &[
    KeySpec::new("model", "symmetric", "symmetric: both atoms in the thermal field; asymmetric: atom 2 decays at eta instead"),
    KeySpec::new("omega", "0.2", "effective coupling g^2/Delta"),
    KeySpec::new("gamma", "0.01", "atomic decay rate"),
    KeySpec::new("n_t", "0", "thermal photon number"),
    KeySpec::new("eta", "0", "decay rate of atom 2 (asymmetric model only)"),
    KeySpec::new("initial", "10", "initial product state: 00, 10 or 01"),
    KeySpec::new("engine", "auto", "auto, analytic or numeric"),
    KeySpec::new("t", "0:100:400", "time grid"),
];

/// `(row, column)` pairs of the tracked entries, 1-based.
pub const TRACKED: [(usize, usize); 6] = [(1, 1), (2, 2), (3, 3), (4, 4), (2, 3), (3, 2)];

pub fn effective_params(cfg: &Config) -> Result<EffectiveParams, CliError> {
    let omega = cfg.scalar("omega")?;
    let gamma = cfg.scalar("gamma")?;
    let n_t = cfg.scalar("n_t")?;
    let eta = cfg.scalar("eta")?;
    let p = cfg.parse_with("model", |m| match m {
        "symmetric" if eta != 0.0 => Err("eta applies to the asymmetric model only".into()),
        "symmetric" => Ok(EffectiveParams::symmetric(omega, gamma, n_t)),
        "asymmetric" => Ok(EffectiveParams::asymmetric(omega, gamma, n_t, eta)),
        other => Err(format!("model must be symmetric or asymmetric, got '{other}'")),
    })?;
    Ok(p?)
}

impl Named for Evolve {
    fn name(&self) -> &'static str {
        "evolve"
    }
}

impl Command for Evolve {
    fn about(&self) -> &'static str {
        "Two-atom state, concurrence and CHSH value along a time grid"
    }

    fn keys(&self) -> &'static [KeySpec] {
        KEYS
    }

    fn run(&self, cfg: &Config, out: &mut CsvOutput) -> Result<Report, CliError> {
        let params = effective_params(cfg)?;
        let initial: ProductState = cfg.parse_with("initial", |s| s.parse().map_err(|e| format!("{e}")))?;
        let problem = EvolutionProblem { params, initial };
        let engines = Registry::<dyn EvolutionEngine>::with_defaults();
        let engine = match cfg.raw("engine").trim() {
            "auto" => engines.select(&problem)?,
            name => {
                let engine = cfg.parse_with("engine", |n| engines.require(n).map_err(|e| e.to_string()))?;
                if !engine.supports(&problem) {
                    return Err(CliError::Usage(format!(
                        "engine '{name}' does not support this problem (the closed form needs the \
                         symmetric model and initial state 10)"
                    )));
                }
                engine
            }
        };
        let grid = cfg.value("t")?.points();
        let states = engine.evolve(&problem, &grid)?;
        let measures = par_map(&states, |s| Ok((concurrence(s)?, bell_max(s)?)))?;

        let mut header = vec!["t".to_string(), "engine".into(), "C".into(), "B".into()];
        for (i, j) in TRACKED {
            header.push(format!("re_rho{i}{j}"));
            header.push(format!("im_rho{i}{j}"));
        }
        out.header(&header);
        for ((t, s), (c, b)) in grid.iter().zip(&states).zip(&measures) {
            let mut row = vec![fmt_float(*t), engine.name().to_string(), fmt_float(*c), fmt_float(*b)];
            for (i, j) in TRACKED {
                let z = s.entry(i, j);
                row.push(fmt_float(z.re));
                row.push(fmt_float(z.im));
            }
            out.row(row);
        }
        let c_max = measures.iter().map(|m| m.0).fold(0.0, f64::max);
        Ok(Report::ok(format!(
            "evolve: {} times with the {} engine, max concurrence {c_max:.6}",
            grid.len(),
            engine.name()
        )))
    }
}

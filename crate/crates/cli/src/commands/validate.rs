use noisy_cavity::adiabatic::{validate_adiabatic, ADIABATIC_TOL, CUTOFF_TOL, TRACKED_ENTRIES};
use noisy_cavity::dynamics::ProductState;
use noisy_cavity::engine::Named;
use noisy_cavity::model::{FullModelParams, LARGE_DETUNING_RATIO};

use super::{Command, Report};
use crate::config::{Config, KeySpec};
use crate::error::CliError;
use crate::output::{fmt_float, CsvOutput};

pub struct ValidateAdiabatic;

const KEYS: &[KeySpec] = &[
    KeySpec::new("omega_cavity", "10", "cavity frequency"),
    KeySpec::new("omega_atom", "15", "atomic transition frequency"),
    KeySpec::new("g", "0.1", "atom-cavity coupling"),
    KeySpec::new("kappa", "0", "cavity field decay rate"),
    KeySpec::new("n_max", "2", "photon-number cutoff"),
    KeySpec::new("gamma", "0.01", "atomic decay rate (both atoms)"),
    KeySpec::new("n_t", "0", "thermal photon number (both atoms)"),
    KeySpec::new("initial", "10", "initial atomic product state; the cavity starts in vacuum"),
    KeySpec::new("t", "0:500:400", "time grid"),
];

impl Named for ValidateAdiabatic {
    fn name(&self) -> &'static str {
        "validate-adiabatic"
    }
}

impl Command for ValidateAdiabatic {
    fn about(&self) -> &'static str {
        "Compare the dispersive two-atom model with the atoms + cavity model"
    }

    fn keys(&self) -> &'static [KeySpec] {
        KEYS
    }

    fn run(&self, cfg: &Config, out: &mut CsvOutput) -> Result<Report, CliError> {
        let gamma = cfg.scalar("gamma")?;
        let n_t = cfg.scalar("n_t")?;
        let p = FullModelParams {
            omega_cavity: cfg.scalar("omega_cavity")?,
            omega_atom: cfg.scalar("omega_atom")?,
            g: cfg.scalar("g")?,
            kappa: cfg.scalar("kappa")?,
            n_max: cfg.count("n_max")?,
            gamma: [gamma; 2],
            n_t: [n_t; 2],
        };
        let initial: ProductState = cfg.parse_with("initial", |s| s.parse().map_err(|e| format!("{e}")))?;
        let grid = cfg.value("t")?.points();
        let v = validate_adiabatic(&p, initial, &grid)?;

        let mut report = Report::default();
        if !v.large_detuning {
            let warning = format!(
                "warning: detuning ratio |Delta|/(g sqrt(n_max+1)) = {:.3} is below {LARGE_DETUNING_RATIO}; \
                 the dispersive model is not expected to hold",
                v.detuning_ratio
            );
            eprintln!("{warning}");
            out.comment(&warning);
        }
        let mut header = vec!["t".to_string()];
        header.extend(TRACKED_ENTRIES.iter().map(|(i, j)| format!("gap_rho{i}{j}")));
        header.push("max_gap".into());
        out.header(&header);
        let c = &v.comparison;
        for ((t, gaps), max) in c.times.iter().zip(&c.entry_gaps).zip(&c.max_entry_gap) {
            let mut row = vec![fmt_float(*t)];
            row.extend(gaps.iter().map(|g| fmt_float(*g)));
            row.push(fmt_float(*max));
            out.row(row);
        }

        let verdict = if v.passed { "PASS" } else { "FAIL" };
        let lines = [
            format!("effective coupling = {}", fmt_float(p.effective()?.omega_eff)),
            format!("max_gap = {} (limit {ADIABATIC_TOL})", fmt_float(v.max_gap)),
            format!("max_gap at n_max + 1 = {}", fmt_float(v.raised_cutoff_max_gap)),
            format!("cutoff change = {} (limit {CUTOFF_TOL})", fmt_float(v.cutoff_delta)),
            format!("result = {verdict}"),
        ];
        for line in &lines {
            out.comment(line);
        }
        report.summary.push(format!(
            "validate-adiabatic: {verdict}, max gap {:.3e}, cutoff change {:.3e}",
            v.max_gap, v.cutoff_delta
        ));
        if !v.passed {
            report.failure = Some(format!(
                "max gap {:.3e} (limit {ADIABATIC_TOL}), cutoff change {:.3e} (limit {CUTOFF_TOL})",
                v.max_gap, v.cutoff_delta
            ));
        }
        Ok(report)
    }
}

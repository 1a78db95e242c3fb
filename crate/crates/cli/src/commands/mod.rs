//! One command per mode, held in a name-keyed registry.

mod bell_evolve;
mod evolve;
mod region;
mod steady_sweep;
mod validate;

use noisy_cavity::engine::{Named, Registry, SteadyStateEngine};
use noisy_cavity::measures::{bell_max, concurrence, concurrence_x};
use noisy_cavity::model::{build_effective_liouvillian, EffectiveParams};
use noisy_cavity::dynamics::numeric_steady;
use rayon::prelude::*;

use crate::config::{Config, KeySpec};
use crate::error::CliError;
use crate::output::CsvOutput;

/// Environment variable holding the worker-thread count.
pub const WORKERS_ENV: &str = "NOISY_CAVITY_WORKERS";

/// What a finished run reports besides its CSV.
#[derive(Debug, Default)]
pub struct Report {
    /// Printed to stdout.
    pub summary: Vec<String>,
    /// Set when the run's own pass/fail check failed.
    pub failure: Option<String>,
}

impl Report {
    pub fn ok(line: impl Into<String>) -> Self {
        Self {
            summary: vec![line.into()],
            failure: None,
        }
    }
}

pub trait Command: Named + Send + Sync {
    fn about(&self) -> &'static str;
    fn keys(&self) -> &'static [KeySpec];
    fn run(&self, cfg: &Config, out: &mut CsvOutput) -> Result<Report, CliError>;
}

pub fn registry() -> Registry<dyn Command> {
    let mut r = Registry::<dyn Command>::new();
    let commands: [Box<dyn Command>; 5] = [
        Box::new(evolve::Evolve),
        Box::new(steady_sweep::SteadySweep),
        Box::new(region::Region),
        Box::new(bell_evolve::BellEvolve),
        Box::new(validate::ValidateAdiabatic),
    ];
    for c in commands {
        r.register(c).expect("distinct command names");
    }
    r
}

/// Maps `f` over `items` on the worker pool, keeping input order.
pub fn par_map<I, T, F>(items: &[I], f: F) -> Result<Vec<T>, CliError>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> Result<T, CliError> + Sync + Send,
{
    let pool = worker_pool()?;
    pool.install(|| items.par_iter().map(f).collect())
}

fn worker_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var(WORKERS_ENV) {
        let n: usize = raw
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Usage(format!("{WORKERS_ENV} must be a positive integer, got '{raw}'")))?;
        builder = builder.num_threads(n);
    }
    builder
        .build()
        .map_err(|e| CliError::Consistency(format!("cannot start worker pool: {e}")))
}

/// Grid points between kernel cross-checks of closed-form steady states.
pub const SPOT_CHECK_STRIDE: usize = 100;
/// Largest tolerated entry gap in a spot check.
pub const SPOT_CHECK_TOL: f64 = 1e-8;

/// Concurrence and maximal CHSH value of a steady state.
pub struct SteadyPoint {
    pub concurrence: f64,
    pub bell: f64,
}

/// Steady state from the first supporting engine. With `spot_check`, a
/// closed-form result is compared against the Liouvillian kernel.
pub fn steady_point(
    engines: &Registry<dyn SteadyStateEngine>,
    p: &EffectiveParams,
    spot_check: bool,
) -> Result<SteadyPoint, CliError> {
    let engine = engines.select(p)?;
    let state = engine.steady(p)?;
    if spot_check && engine.name() != "numeric" {
        let kernel = numeric_steady(&build_effective_liouvillian(p)?)?;
        let gap = kernel.matrix().max_abs_diff(state.matrix());
        if gap > SPOT_CHECK_TOL {
            return Err(CliError::Consistency(format!(
                "closed-form and kernel steady states differ by {gap:e} at {p:?}"
            )));
        }
    }
    let concurrence = concurrence_x(&state).or_else(|_| concurrence(&state))?;
    let bell = bell_max(&state)?;
    Ok(SteadyPoint {
        concurrence,
        bell,
    })
}

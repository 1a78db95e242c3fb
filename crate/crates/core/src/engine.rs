//! Interchangeable solvers behind common traits, looked up by name at runtime.

use crate::dynamics::{
    analytic_state_symmetric, analytic_steady_asymmetric, numeric_steady, trajectory,
};
use crate::error::{Error, Result};
use crate::model::{build_effective_liouvillian, EffectiveParams};
use crate::state::{DensityMatrix4, ProductState};

/// Anything that can sit in a [`Registry`].
pub trait Named {
    fn name(&self) -> &'static str;
}

/// Dispersive-model evolution from a product state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolutionProblem {
    pub params: EffectiveParams,
    pub initial: ProductState,
}

pub trait EvolutionEngine: Named + Send + Sync {
    /// Whether the engine's preconditions hold for `problem`.
    fn supports(&self, problem: &EvolutionProblem) -> bool;
    /// States at every time of `grid` (ascending, starting at `t >= 0`).
    fn evolve(&self, problem: &EvolutionProblem, grid: &[f64]) -> Result<Vec<DensityMatrix4>>;
}

pub trait SteadyStateEngine: Named + Send + Sync {
    fn supports(&self, params: &EffectiveParams) -> bool;
    fn steady(&self, params: &EffectiveParams) -> Result<DensityMatrix4>;
}

/// Name-keyed collection preserving registration order.
pub struct Registry<T: ?Sized + Named> {
    entries: Vec<Box<T>>,
}

impl<T: ?Sized + Named> Default for Registry<T> {
    fn default() -> Self {
        Self { entries: Vec::new() }
    }
}

impl<T: ?Sized + Named> Registry<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register(&mut self, entry: Box<T>) -> Result<()> {
        if self.get(entry.name()).is_some() {
            return Err(Error::Parameter(format!("'{}' is already registered", entry.name())));
        }
        self.entries.push(entry);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&T> {
        self.entries.iter().find(|e| e.name() == name).map(|e| &**e)
    }

    /// Like [`get`](Self::get) but with an error listing the known names.
    pub fn require(&self, name: &str) -> Result<&T> {
        self.get(name).ok_or_else(|| {
            Error::Parameter(format!("unknown name '{name}'; expected one of {}", self.names().join(", ")))
        })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.entries.iter().map(|e| &**e)
    }
}

impl Registry<dyn EvolutionEngine> {
    /// Both built-in engines, closed form first.
    pub fn with_defaults() -> Self {
        let mut r = Self::new();
        r.register(Box::new(AnalyticEvolution)).expect("distinct names");
        r.register(Box::new(NumericEvolution)).expect("distinct names");
        r
    }

    /// First registered engine whose preconditions hold.
    pub fn select(&self, problem: &EvolutionProblem) -> Result<&dyn EvolutionEngine> {
        self.iter()
            .find(|e| e.supports(problem))
            .ok_or_else(|| Error::Mode("no evolution engine supports this problem".into()))
    }
}

impl Registry<dyn SteadyStateEngine> {
    /// Both built-in engines, closed form first.
    pub fn with_defaults() -> Self {
        let mut r = Self::new();
        r.register(Box::new(AnalyticSteady)).expect("distinct names");
        r.register(Box::new(NumericSteady)).expect("distinct names");
        r
    }

    pub fn select(&self, params: &EffectiveParams) -> Result<&dyn SteadyStateEngine> {
        self.iter()
            .find(|e| e.supports(params))
            .ok_or_else(|| Error::Mode("no steady-state engine supports these parameters".into()))
    }
}

/// Closed form; symmetric driving, start in `|10⟩`.
pub struct AnalyticEvolution;

impl Named for AnalyticEvolution {
    fn name(&self) -> &'static str {
        "analytic"
    }
}

impl EvolutionEngine for AnalyticEvolution {
    fn supports(&self, problem: &EvolutionProblem) -> bool {
        problem.params.is_symmetric() && problem.initial == ProductState::AtomOneExcited
    }

    fn evolve(&self, problem: &EvolutionProblem, grid: &[f64]) -> Result<Vec<DensityMatrix4>> {
        if !self.supports(problem) {
            return Err(Error::Mode(
                "closed-form evolution needs symmetric driving and initial state 10".into(),
            ));
        }
        check_grid(grid)?;
        grid.iter().map(|&t| analytic_state_symmetric(&problem.params, t)).collect()
    }
}

/// Matrix exponential of the Liouvillian; any parameters and initial state.
pub struct NumericEvolution;

impl Named for NumericEvolution {
    fn name(&self) -> &'static str {
        "numeric"
    }
}

impl EvolutionEngine for NumericEvolution {
    fn supports(&self, problem: &EvolutionProblem) -> bool {
        problem.params.validate().is_ok()
    }

    fn evolve(&self, problem: &EvolutionProblem, grid: &[f64]) -> Result<Vec<DensityMatrix4>> {
        let l = build_effective_liouvillian(&problem.params)?;
        let rho0 = DensityMatrix4::product(problem.initial).into();
        trajectory(&l, &rho0, grid)?
            .states
            .into_iter()
            .map(DensityMatrix4::try_from)
            .collect()
    }
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::Parameter("time grid is empty".into()));
    }
    if grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::Parameter("time grid must be ascending".into()));
    }
    Ok(())
}

/// Closed form; atom 2 free of thermal coupling, non-degenerate denominators.
pub struct AnalyticSteady;

impl Named for AnalyticSteady {
    fn name(&self) -> &'static str {
        "analytic"
    }
}

impl SteadyStateEngine for AnalyticSteady {
    fn supports(&self, p: &EffectiveParams) -> bool {
        let (g, n, eta, w) = (p.gamma[0], p.n_t[0], p.eta, p.omega_eff);
        p.validate().is_ok()
            && p.is_asymmetric()
            && g + eta + 2.0 * n * g != 0.0
            && w * w + g * eta + 2.0 * n * g * eta != 0.0
    }

    fn steady(&self, p: &EffectiveParams) -> Result<DensityMatrix4> {
        analytic_steady_asymmetric(p)
    }
}

/// Kernel of the Liouvillian with unit trace.
pub struct NumericSteady;

impl Named for NumericSteady {
    fn name(&self) -> &'static str {
        "numeric"
    }
}

impl SteadyStateEngine for NumericSteady {
    fn supports(&self, p: &EffectiveParams) -> bool {
        p.validate().is_ok()
    }

    fn steady(&self, p: &EffectiveParams) -> Result<DensityMatrix4> {
        numeric_steady(&build_effective_liouvillian(p)?)?.try_into()
    }
}

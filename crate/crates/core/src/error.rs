use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: String, found: String },

    #[error("matrix is not positive semidefinite (eigenvalue {min_eigenvalue:e})")]
    NotPsd { min_eigenvalue: f64 },

    #[error("numeric range exceeded: {0}")]
    Range(String),

    #[error("eigen-iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("operator has no kernel (smallest relative singular value {smallest_relative:e})")]
    NoSteadyState { smallest_relative: f64 },

    #[error("kernel is {kernel_dim}-dimensional; smallest singular values {singular_values:?}")]
    AmbiguousSteadyState {
        kernel_dim: usize,
        singular_values: Vec<f64>,
    },

    #[error("degenerate steady state: {0}")]
    DegenerateSteadyState(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("parameters outside the engine's validity domain: {0}")]
    Mode(String),

    #[error("invalid state: {0}")]
    State(String),

    #[error("state is not X-shaped (largest off-pattern entry {max_off_pattern:e})")]
    NotXState { max_off_pattern: f64 },

    #[error("propagated state lost positivity (eigenvalue {min_eigenvalue:e})")]
    IntegrationAccuracy { min_eigenvalue: f64 },
}

use noisy_cavity::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Argument-parser message, already formatted for the terminal.
    #[error("{0}")]
    Parser(String),
    /// Bad flags, config entries or parameter values.
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    /// Two engines disagree, or a solver broke an invariant.
    #[error("internal consistency error: {0}")]
    Consistency(String),
    /// The run completed but its pass/fail check failed.
    #[error("validation failed: {0}")]
    ValidationFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Parser(_) | Self::Usage(_) | Self::Io(_) => 1,
            Self::Consistency(_) | Self::ValidationFailed(_) => 2,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Parameter(_)
            | CoreError::Mode(_)
            | CoreError::DegenerateSteadyState(_)
            | CoreError::AmbiguousSteadyState { .. } => Self::Usage(e.to_string()),
            other => Self::Consistency(other.to_string()),
        }
    }
}

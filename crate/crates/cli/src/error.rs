use thiserror::Error;

#[derive(Error, Debug)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid argument: {0}")]
    Usage(String),
    #[error("bad report: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] rbvc_core::Error),
}

impl CliError {
    /// Process exit code: 2 for structural failures of the analysis, 3 for
    /// malformed input or parameters.
    pub fn exit_code(&self) -> i32 {
        use rbvc_core::Error as E;
        match self {
            CliError::Core(e) => match e {
                E::SelfLoop(..)
                | E::UnknownVertex(_)
                | E::UnknownEdge(_)
                | E::NegativeWeight(_)
                | E::WeightCount { .. }
                | E::InvalidSet(_)
                | E::InvalidRho
                | E::InvalidAlpha
                | E::InvalidCycle(_)
                | E::InvalidCombination
                | E::NotIndependent
                | E::InvalidParams(_)
                | E::UnnormalizedDual(_)
                | E::InvalidColoring(_) => 3,
                _ => 2,
            },
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Invariant(_) => 4,
            CliError::CheckFailed(_) => 5,
        }
    }
}

impl From<trexp_core::Error> for CliError {
    fn from(e: trexp_core::Error) -> Self {
        use trexp_core::Error as E;
        match e {
            E::Overflow(_) | E::QuadratureNoConvergence { .. } | E::NoConvergence(_) => {
                CliError::Invariant(e.to_string())
            }
            _ => CliError::Domain(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

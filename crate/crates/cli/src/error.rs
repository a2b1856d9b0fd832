use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{origin}:{line}: {message}")]
    Parse {
        origin: String,
        line: usize,
        message: String,
    },
    #[error("{origin}: {message}")]
    Invalid { origin: String, message: String },
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] horizon_core::Error),
    #[error("{0}")]
    Mismatch(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    /// 0 success, 2 parse or validation, 3 verification mismatch, 4 budget.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 3,
            CliError::Budget(_) | CliError::Core(horizon_core::Error::BudgetExceeded { .. }) => 4,
            CliError::Write { .. } => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

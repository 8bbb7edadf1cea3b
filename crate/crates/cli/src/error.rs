use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("not supported: {0}")]
    Unsupported(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Malformed(_) => 2,
            CliError::Unsupported(_) => 3,
            CliError::Budget(_) => 4,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<hdimp_core::Error> for CliError {
    fn from(e: hdimp_core::Error) -> Self {
        use hdimp_core::Error as E;
        match e {
            E::InvalidInput(_) | E::Construction(_) => CliError::Malformed(e.to_string()),
            E::BudgetExceeded(_) => CliError::Budget(e.to_string()),
            E::Invariant(_) => CliError::Internal(e.to_string()),
        }
    }
}

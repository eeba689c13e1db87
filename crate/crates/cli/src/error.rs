use thiserror::Error;

/// Failures that stop a command before any report is produced.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] skewcode::Error),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("{0}")]
    Spec(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 1 for violated algebraic claims or internal cross-checks, 2 for
    /// unusable input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(
                skewcode::Error::NotRightDivisor { .. } | skewcode::Error::Oracle(_),
            ) => 1,
            _ => 2,
        }
    }
}

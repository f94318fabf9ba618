use thiserror::Error;

/// Failures surfaced to the shell, each with its exit status.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, unreadable or malformed input, unknown family.
    #[error("{0}")]
    Input(String),
    /// A requested assertion came out false (report is still written).
    #[error("{0}")]
    Verdict(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Verdict(_) => 1,
        }
    }
}

impl From<nichols_core::Error> for CliError {
    fn from(e: nichols_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

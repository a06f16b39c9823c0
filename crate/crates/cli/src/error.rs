use std::io;

use crand_core::analysis::AnalysisError;

pub(crate) const USAGE: u8 = 1;
pub(crate) const RUNTIME: u8 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Generator(#[from] crand_core::Error),
    #[error("{0}")]
    Analysis(AnalysisError),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("no system entropy available: {0}")]
    Entropy(String),
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::Generator(g) => CliError::Generator(g),
            other => CliError::Analysis(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Generator(_) => USAGE,
            CliError::Analysis(AnalysisError::TooShort { .. } | AnalysisError::TooFewReps(_)) => {
                USAGE
            }
            CliError::Analysis(_) | CliError::Io(_) | CliError::Entropy(_) => RUNTIME,
        }
    }
}

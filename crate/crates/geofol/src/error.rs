use thiserror::Error;

/// Failures surfaced by the command line, each mapped to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed or inadmissible user input.
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    /// A closed-form prediction disagreed with the tensor pipeline.
    #[error("internal cross-check mismatch: {0}")]
    Internal(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io { .. } => exit::INPUT,
            CliError::Internal(_) => exit::INTERNAL,
        }
    }
}

impl From<geofol_core::GeometryError> for CliError {
    fn from(e: geofol_core::GeometryError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<geofol_core::scalar::LiteralError> for CliError {
    fn from(e: geofol_core::scalar::LiteralError) -> Self {
        CliError::Input(e.to_string())
    }
}

pub mod exit {
    pub const OK: i32 = 0;
    pub const COUNTEREXAMPLE: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const INTERNAL: i32 = 3;
}

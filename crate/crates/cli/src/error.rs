use thiserror::Error;

/// Failures surfaced by the command line, each mapped to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    /// A well-formed request with a negative answer.
    #[error("{0}")]
    Rejected(String),
    #[error(transparent)]
    Core(#[from] rank1_lower::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("config: {0}")]
    Config(#[from] toml::de::Error),
}

impl CliError {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// 1 for inadmissible or not found, 2 for usage and parse problems.
    pub fn exit_code(&self) -> i32 {
        use rank1_lower::Error as E;
        match self {
            CliError::Rejected(_) => 1,
            CliError::Core(E::NotFound { .. } | E::ZetaCap(..) | E::Overflow(_)) => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

use thiserror::Error;

/// Failures surfaced by the command line, each mapped to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),

    #[error("{0}")]
    Solver(#[from] rfqmst::Error),

    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for infeasible inputs and enumeration guard trips, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        use rfqmst::Error as E;
        match self {
            CliError::Solver(
                E::NotSpanningTree(_)
                | E::LengthMismatch { .. }
                | E::InfeasibleEpsilon(_)
                | E::InfeasibleSize { .. }
                | E::BudgetExceeded { .. },
            ) => 2,
            _ => 1,
        }
    }

    pub(crate) fn io(path: impl AsRef<std::path::Path>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.as_ref().display().to_string(),
            source,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(source: std::io::Error) -> Self {
        CliError::Io {
            path: "<stdout>".into(),
            source,
        }
    }
}

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),

    #[error("solver error: {0}")]
    Solver(tensile_domain::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for configuration and I/O problems, 3 for solver failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Solver(_) => 3,
            _ => 2,
        }
    }
}

impl From<tensile_domain::Error> for CliError {
    fn from(e: tensile_domain::Error) -> Self {
        use tensile_domain::Error as E;
        match e {
            E::DegenerateMaterial(_)
            | E::InvalidStretch { .. }
            | E::InvalidLoad(_)
            | E::InvalidArgument(_) => CliError::Config(e.to_string()),
            other => CliError::Solver(other),
        }
    }
}

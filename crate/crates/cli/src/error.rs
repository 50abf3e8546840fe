use archgeom_core::boxcount::BoxCountError;
use archgeom_core::generators::GeneratorError;
use archgeom_core::hyperbolic::GeometryError;
use archgeom_core::raster::RasterError;
use archgeom_core::stats::StatsError;
use thiserror::Error;

/// Command failures, bucketed by the exit-code contract: 1 for usage
/// errors, 2 for unreadable or malformed input, 3 for violations of a
/// numeric or model domain.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl From<RasterError> for CliError {
    fn from(e: RasterError) -> Self {
        match e {
            // A threshold above maxval is a bad flag value, not bad data.
            RasterError::ThresholdOutOfRange { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<BoxCountError> for CliError {
    fn from(e: BoxCountError) -> Self {
        match e {
            BoxCountError::TooFewLevels(_) => CliError::Usage(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<GeneratorError> for CliError {
    fn from(e: GeneratorError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<StatsError> for CliError {
    fn from(e: StatsError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("invalid report JSON: {e}"))
    }
}

/// Attaches the offending path to an I/O error.
pub fn io_err(path: &std::path::Path, e: std::io::Error) -> CliError {
    CliError::Input(format!("{}: {e}", path.display()))
}

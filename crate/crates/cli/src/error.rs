use apring_core::apmin::ApminError;
use apring_core::curves::CurveError;
use apring_core::partition::PartitionError;
use apring_core::poly::PolyError;
use apring_core::series::SeriesError;

/// Failure of a subcommand, carrying the process exit code it maps to.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Numeric(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Numeric(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<PartitionError> for CliError {
    fn from(e: PartitionError) -> Self {
        match e {
            PartitionError::Empty
            | PartitionError::InvalidWeight(_)
            | PartitionError::InvalidDecimal(_) => CliError::Parse(e.to_string()),
            _ => CliError::Numeric(e.to_string()),
        }
    }
}

impl From<ApminError> for CliError {
    fn from(e: ApminError) -> Self {
        match e {
            ApminError::Partition(p) => p.into(),
            other => CliError::Numeric(other.to_string()),
        }
    }
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        match e {
            SeriesError::Partition(p) => p.into(),
            SeriesError::TooManyTerms(..) => CliError::Numeric(e.to_string()),
            other => CliError::Parse(other.to_string()),
        }
    }
}

impl From<CurveError> for CliError {
    fn from(e: CurveError) -> Self {
        match e {
            CurveError::Io(io) => CliError::Io(io.to_string()),
            other => CliError::Numeric(other.to_string()),
        }
    }
}

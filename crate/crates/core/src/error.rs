use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("time moved backwards: {from} ms -> {to} ms")]
    TimeRegression { from: f64, to: f64 },
    #[error("invalid time step {0} ms (must be finite and non-negative)")]
    InvalidTimeStep(f64),
    #[error("invalid animation spec: {0}")]
    InvalidSpec(String),
    #[error("unknown attribute `{0}`")]
    UnknownAttribute(String),
    #[error("duplicate attribute `{0}`")]
    DuplicateAttribute(String),
    #[error("attribute `{0}` does not hold a number")]
    NotNumeric(String),
    #[error("attribute is not preloadable")]
    NotPreloadable,
    #[error("duplicate mark id `{0}`")]
    DuplicateMark(String),
    #[error("unknown mark id `{0}`")]
    UnknownMark(String),
    #[error("cannot resolve mark id `{0}`")]
    UnresolvableMark(String),
    #[error("staging is not configured on this group")]
    StagingNotConfigured,
    #[error("query radius must be non-negative, got {0}")]
    NegativeRadius(f64),
    #[error("cell size must be finite and positive, got {0}")]
    InvalidCellSize(f64),
    #[error("degenerate data domain: {0}")]
    DegenerateDomain(String),
    #[error("mark set is empty")]
    EmptyMarkSet,
    #[error("mark `{0}` has no finite position")]
    MissingPosition(String),
    #[error("padding must be in [0, 0.5), got {0}")]
    InvalidPadding(f64),
    #[error("scale must be finite and positive, got {0}")]
    InvalidScale(f64),
    #[error("unknown setting `{0}`")]
    UnknownSetting(String),
    #[error("invalid benchmark config: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

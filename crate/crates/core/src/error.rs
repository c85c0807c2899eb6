use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unknown space id `{0}`")]
    UnknownSpace(String),

    #[error("{0} is outside the worked families supported by the bound formula")]
    OutsideWorkedFamilies(String),

    #[error("{0} has no compact-subgroup volume; supply one through a spaces file")]
    MissingKVolume(String),

    #[error("no restricted-root data for {0}")]
    NoRootData(String),

    #[error("gram matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("restricted root system has no roots")]
    EmptyRootSystem,

    #[error("malformed restricted root system: {0}")]
    MalformedRoots(String),

    #[error("no zero of the Wang function in (0, {limit}]")]
    NoZeroFound { limit: f64 },

    #[error("gamma function argument must be positive, got {0}")]
    NonPositiveGamma(f64),

    #[error("ball radius {r} exceeds the cut locus of the model sphere with curvature {k}")]
    BeyondCutLocus { r: f64, k: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid space definition `{id}`: {reason}")]
    InvalidSpace { id: String, reason: String },

    #[error("failed to parse {path}: {reason}")]
    Parse { path: String, reason: String },
}

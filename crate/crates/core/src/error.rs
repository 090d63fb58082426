use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("duplicate point `{0}`")]
    DuplicatePoint(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("`{0}` and `{1}` are related both ways: the space is not T0")]
    NotT0(String, String),
    #[error("{0} points requested; at most {max} points are supported", max = crate::pointset::MAX_POINTS)]
    TooManyPoints(usize),
    #[error("assignment is not continuous: `{0}` ≤ `{1}` but their images are not ordered")]
    NotContinuous(String, String),
    #[error("assignment has no image for `{0}`")]
    MissingImage(String),
    #[error("maps do not share domain and codomain")]
    SpaceMismatch,
    #[error("size guard: {what} exceeds the limit of {limit} (set by {knob})")]
    SizeGuard { what: String, limit: usize, knob: &'static str },
    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(String),
    #[error("center index {0} is outside the carrier")]
    UnknownCarrierIndex(usize),
    #[error("distance matrix is not a pseudometric matrix: {0}")]
    InvalidMatrix(String),
    #[error("invalid PL circle map: {0}")]
    InvalidCircleMap(String),
    #[error("`{0}` is not a member of the canonical cover of Map(S1,S1)")]
    NotInCanonicalCover(String),
    #[error("method `{0}` requires a basepoint")]
    MissingBasepoint(&'static str),
    #[error("could not parse `{0}`: {1}")]
    Parse(String, String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("duplicate vertex identifier {0}")]
    DuplicateVertex(u32),
    #[error("set functions live on different ground sets")]
    GroundMismatch,
    #[error("arity error: {0}")]
    Arity(String),
    #[error("{what} of size {size} exceeds the configured cap of {cap}")]
    SizeCap { what: &'static str, size: u128, cap: u128 },
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("{0:?} is not an edge of the complex")]
    NotAnEdge(Vec<u32>),
    #[error("complex is not in the required class: {0}")]
    NotInClass(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("target structure has no edges")]
    EmptyTarget,
    #[error("marginals over the glued coordinates differ; not a joint vertex factor")]
    JointFactorMismatch,
    #[error("support error: {0}")]
    Support(String),
    #[error("measure is not supported on homomorphisms: {0}")]
    NotAHomomorphismMeasure(String),
    #[error("homomorphism set is empty")]
    EmptySupport,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("bipartition error: {0}")]
    Bipartition(String),
    #[error("gluing sets J1 and J2 intersect")]
    Disjointness,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

use crate::rootsys::Family;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unsupported root system {family} of rank {rank}")]
    UnsupportedSystem { family: Family, rank: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("simple root index {0} out of range")]
    BadSimpleIndex(usize),
    #[error("{0}")]
    OutOfScope(String),
    #[error("unsupported support in coadjoint action: {0}")]
    UnsupportedSupport(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("singular system: {0}")]
    Singular(String),
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

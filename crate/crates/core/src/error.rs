use thiserror::Error;

/// Errors produced by group construction, enumeration and graph queries.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unsupported group: {0}")]
    Unsupported(String),

    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),

    #[error("operation requires a finite group, but {0} is infinite")]
    InfiniteGroup(String),

    #[error("root closure did not converge within depth {0}; tolerance failure or infinite group")]
    NonConvergence(usize),

    #[error("root {0} escapes the generated ball; increase the depth")]
    DepthEscape(String),

    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("element is not an involution: {0}")]
    NotInvolution(String),

    #[error("element {0} is not a vertex of the graph")]
    NotAVertex(String),

    #[error("element {0} is not a distinguished coset representative")]
    NotCosetRepresentative(String),

    #[error("no factorization found for {0}")]
    Unclassified(String),

    #[error("diameter is undefined: {0}")]
    DiameterUndefined(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("non-integral value in recursion: {0}")]
    NonIntegral(String),

    #[error("dedup key collision between matrices differing by {0:e}")]
    KeyCollision(f64),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

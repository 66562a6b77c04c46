use thiserror::Error;

/// Errors raised by the computational modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("basis is linearly dependent: rank {rank} < {len}")]
    DependentBasis { rank: usize, len: usize },

    #[error("duplicate monomial {0}")]
    DuplicateMonomial(String),

    #[error("a subspace needs at least one basis element")]
    EmptyBasis,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("degenerate polytope: {0}")]
    Degenerate(String),

    #[error("basis condition fails at vertex {vertex}: {detail}")]
    NotSmooth { vertex: String, detail: String },

    #[error("point list is not saturated: its convex hull contains the lattice point {0} missing from the list")]
    NotSaturated(String),

    #[error("face not found: {0}")]
    FaceNotFound(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

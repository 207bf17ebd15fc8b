use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} exceeds cap {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("unknown invariant {0:?}")]
    UnknownInvariant(String),

    #[error("stabilizer mismatch: expected order {expected}, found {found}")]
    StabilizerMismatch { expected: usize, found: usize },

    #[error("invariant polynomial would exceed {cap} terms")]
    SizeOverflow { cap: usize },

    #[error("polynomial degree must be at least {min}, got {got}")]
    DegreeTooSmall { min: usize, got: i64 },

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("root iteration did not converge at {bits} bits")]
    NoConvergence { bits: u32 },

    #[error("coefficient certification failed at the {cap}-bit precision cap")]
    PrecisionCapExceeded { cap: u32 },

    #[error("resolvent coefficients are not integral; the root ordering does not place the group inside the ambient")]
    CoefficientsNotIntegral,

    #[error("resolvent root clusters overlap; more precision is needed")]
    AmbiguousCluster,

    #[error("no candidate group is consistent with the observed resolvents")]
    CandidatesExhausted,

    #[error("no separable resolvent found within {budget} rescue attempts")]
    RescueBudgetExhausted { budget: usize },

    #[error("expected a polynomial of degree 5, got degree {0}")]
    NotDegree5(i64),

    #[error("polynomial is reducible over the rationals")]
    ReducibleInput,

    #[error("resolvent root {0} is not a simple root")]
    MultipleRoot(usize),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

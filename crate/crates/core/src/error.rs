use thiserror::Error;

/// Errors raised by the combinatorial, geometric and resolution layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("not an element of the symplectic Weyl group: {0}")]
    NotSymplecticWeylElement(String),

    #[error("invariant breach: {0}")]
    InvariantBreach(String),

    #[error("weight {weight:?} is not dominant for the cut at {cut}")]
    NotQDominant { weight: Vec<i64>, cut: usize },

    #[error("odd weight {0} has no hook decomposition of the requested shape")]
    OddWeight(u32),

    #[error("matrix is not symplectic")]
    NotSymplectic,

    #[error("upper-left block is singular; point is not in the opposite big cell")]
    NotInOppositeCell,

    #[error("matrix is not persymmetric")]
    NotPersymmetric,

    #[error("index pair ({i}, {j}) lies outside the treated Plücker ranges")]
    PluckerRange { i: usize, j: usize },

    #[error("matrix does not match the opposite cell pattern: {0}")]
    PatternViolation(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("rational-singularity violation: class in H^{degree}(Λ^{t}) lands in homological index {index}")]
    RationalSingularityViolation { t: usize, degree: usize, index: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Coxeter matrix is not of spherical type: {0}")]
    NonSphericalType(String),
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("rank {rank} exceeds the configured cap of {cap}")]
    RankTooLarge { rank: usize, cap: usize },
    #[error("elements belong to different groups")]
    ContextMismatch,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("element is not simple for the Garside element Δ^{0}")]
    NotSimple(u32),
    #[error("the requested summit set is empty")]
    EmptySet,
    #[error("element is not in its ultra summit set")]
    NotInUss,
    #[error("conjugator does not conjugate the given elements")]
    NotConjugating,
    #[error("arrow label {0} does not fit any of the three arrow types")]
    UnclassifiableLabel(String),
    #[error("parabolic subgroup is not irreducible")]
    NotIrreducible,
    #[error("parabolic subgroup is not proper")]
    NotProper,
    #[error("the two parabolic subgroups are equal")]
    EqualSubgroups,
    #[error("invalid generator path: {0}")]
    InvalidPath(String),
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("no minimum found among {0} candidates")]
    NoMinimumFound(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("ideal not admissible: {0}")]
    NotAdmissible(String),

    #[error("infinite-dimensional algebra: arrow ideal not nilpotent modulo relations within path length {0}")]
    InfiniteDimensional(usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("vertex `{vertex}` is not a sink at step {step}")]
    NotASink { vertex: String, step: usize },

    #[error("module violates relation {0}")]
    RelationViolated(String),

    #[error("non-split endomorphism quotient: {0}")]
    NonSplit(String),

    #[error("not basic: {0}")]
    NotBasic(String),

    #[error("radical computation requires characteristic zero")]
    CharacteristicZeroRequired,

    #[error("module is projective")]
    ModuleIsProjective,

    #[error("not a generator-cogenerator, missing summands: {0:?}")]
    NotGeneratorCogenerator(Vec<String>),

    #[error("restriction is zero")]
    RestrictionZero,

    #[error("branch overlaps algebra: {0}")]
    BranchOverlap(String),

    #[error("invalid branch: {0}")]
    InvalidBranch(String),

    #[error("kernel not in add(M): {0}")]
    KernelNotInAdd(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

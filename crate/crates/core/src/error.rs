//! Engine-wide error type.
//!
//! "Negative" mathematical outcomes that callers are expected to branch on
//! (a map not being null-homotopic, an inconsistent linear system) are plain
//! `Option`/enum results, not errors. Errors here are contract violations:
//! bad input data, resource bounds, or failed hypotheses of the main
//! construction.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ForgeError {
    #[error("quiver has a directed cycle through vertex `{0}`")]
    CyclicQuiver(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("relation references unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("relation is not homogeneous: paths have different endpoints")]
    InhomogeneousRelation,
    #[error("relation contains a path of length < 2")]
    ShortRelationPath,
    #[error("algebra validation failed: {0}")]
    InvalidAlgebra(String),
    #[error("module validation failed: {0}")]
    InvalidModule(String),
    #[error("chain map validation failed: {0}")]
    InvalidChainMap(String),
    #[error("complex validation failed: {0}")]
    InvalidComplex(String),
    #[error("minimal resolution exceeds bound {0}")]
    ResolutionTooLong(usize),
    #[error("algebra has infinite global dimension (resolution bound hit on a simple module)")]
    InfiniteGlobalDimension,
    #[error("0 is missing from the grading set")]
    ZeroMissing,
    #[error("grading set {0:?} is not admissible")]
    NonAdmissiblePhi(Vec<i64>),
    #[error("object is not presented as a summand of the ambient object")]
    NotInAddU,
    #[error("n-angle instance carries no tower data")]
    MissingTower,
    #[error("operation requires an explicit indecomposable decomposition")]
    DecompositionRequired,
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("morphism completion through the tower failed: {0}")]
    CompletionFailed(String),
    #[error("rank check failed: {0}")]
    RankDeficient(String),
    #[error("generation certificate failed: {0}")]
    CertificateFailed(String),
    #[error("functor does not support negative powers")]
    FunctorNotInvertible,
    #[error("lift through quasi-isomorphism failed (input violates preconditions)")]
    LiftFailed,
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, ForgeError>;

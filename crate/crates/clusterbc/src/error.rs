use thiserror::Error;

/// Errors across the library. Variants tagged "model inconsistency" signal a
/// violated mathematical invariant rather than bad user input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("substitution into a negative power of u{0} requires a unit monomial image")]
    NonUnitImage(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid diagonal: {0}")]
    InvalidDiagonal(String),
    #[error("not a triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("triangulation is not theta-invariant")]
    NotThetaInvariant,
    #[error("triangulation has no labels")]
    Unlabeled,
    #[error("exact division failed: model inconsistency")]
    DivisionFailed,
    #[error("c-vector column {0} has mixed signs: model inconsistency")]
    MixedSigns(usize),
    #[error("seed enumeration exceeded cap of {0}: wrong matrix?")]
    EnumerationCap(usize),
    #[error("quiver has an oriented cycle")]
    CyclicQuiver,
    #[error("quiver carries no involution")]
    NoSigma,
    #[error("model invariant violated: {0}")]
    Model(String),
}

pub type Result<T> = std::result::Result<T, Error>;

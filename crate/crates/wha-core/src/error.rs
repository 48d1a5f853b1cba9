use thiserror::Error;

/// Errors raised by constructors and operations.
///
/// Failed identities are not errors: they are reported as `fail` items.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("grade {grade} lies outside the grading group {group}")]
    GradeOutsideGroup { grade: String, group: String },
    #[error("map is not grade-preserving at entry ({row}, {col})")]
    NotGradePreserving { row: usize, col: usize },
    #[error("map is not idempotent")]
    NotIdempotent,
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("boundary mismatch at {path}: {detail}")]
    BoundaryMismatch { path: String, detail: String },
    #[error("invalid bicharacter: {0}")]
    InvalidBicharacter(String),
    #[error("invalid category presentation: {0}")]
    InvalidPresentation(String),
    #[error("presentation is not a groupoid: {0}")]
    NotAGroupoid(String),
    #[error("characteristic {p} divides the group order {order}")]
    BadCharacteristic { p: u64, order: usize },
    #[error("Frobenius monoid is not separable")]
    NotSeparable,
    #[error("not a Frobenius morphism: {0}")]
    NotFrobeniusMorphism(String),
    #[error("not a weak bimonoid morphism: {0}")]
    NotWeakBimonoidMorphism(String),
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
    #[error("precondition square fails: {0}")]
    PreconditionSquareFailed(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;

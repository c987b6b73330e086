use thiserror::Error;

/// Malformed input or violated preconditions.
///
/// Axiom and structure failures are not errors; they come back as reports
/// with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not square: row {row} has {found} entries, expected {expected}")]
    NotSquare { row: usize, found: usize, expected: usize },

    #[error("table dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("entry {value} at ({row}, {col}) is outside 0..{size}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, size: usize },

    #[error("carrier of size {size} exceeds the limit of {limit}")]
    CarrierTooLarge { size: usize, limit: usize },

    #[error("empty carrier")]
    EmptyCarrier,

    #[error("structure is not a {what}: {detail}")]
    NotAStructure { what: &'static str, detail: String },

    #[error("hyperoperation cell ({scalar}, {element}) is empty")]
    EmptyCell { scalar: usize, element: usize },

    #[error("carrier mismatch: {left} vs {right}")]
    CarrierMismatch { left: usize, right: usize },

    #[error("field mismatch between hypervector spaces")]
    FieldMismatch,

    #[error("degree {value} out of range for {component} component")]
    DegreeOutOfRange { component: &'static str, value: String },

    #[error("invalid degree literal `{0}`")]
    BadDegreeLiteral(String),

    #[error("parameter sets differ")]
    ParameterMismatch,

    #[error("parameter `{0}` is not defined")]
    UnknownParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

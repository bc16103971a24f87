use thiserror::Error;

use crate::algebra::ValidationReport;
use crate::Element;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BckError {
    /// The table is not a square array of in-range indices.
    #[error("malformed table: {0}")]
    Malformed(String),

    /// The table is well formed but violates one or more axioms.
    #[error("table is not a BCK-algebra: {0}")]
    Axioms(ValidationReport),

    /// A subset was expected to be an ideal but is not.
    #[error("not an ideal: {reason}")]
    NotAnIdeal { reason: IdealFailure },

    #[error("weighted commutator needs at least one argument")]
    EmptyCommutator,

    #[error("element {element} is outside the carrier of size {order}")]
    OutOfRange { element: Element, order: usize },

    #[error("set over a carrier of size {found} used with an algebra of order {expected}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("map is not a homomorphism: f({x}*{y}) != f({x})*f({y})")]
    NotAHomomorphism { x: Element, y: Element },

    #[error("target algebra is not commutative")]
    NotCommutative,

    /// A brute-force search would exceed its configured size limit.
    #[error("search too large: {0}")]
    TooLarge(String),

    /// A finite algebra whose central series never reaches the bottom.
    /// Finite BCK-algebras are always nilpotent, so this signals a bug.
    #[error("algebra is not nilpotent: {table:?}")]
    NotNilpotent { table: Vec<Vec<Element>> },

    #[error("index {index} exceeds the evaluation cap {cap}")]
    IndexCap { index: u64, cap: u64 },
}

/// Why a subset failed to be an ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealFailure {
    MissingZero,
    /// `x*y` and `y` are members but `x` is not.
    Implication { x: Element, y: Element, product: Element },
}

impl std::fmt::Display for IdealFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IdealFailure::MissingZero => write!(f, "0 is not a member"),
            IdealFailure::Implication { x, y, product } => write!(
                f,
                "{x}*{y}={product} and {y} are members but {x} is not"
            ),
        }
    }
}

pub type Result<T, E = BckError> = std::result::Result<T, E>;

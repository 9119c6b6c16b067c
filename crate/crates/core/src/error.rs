use thiserror::Error;

use crate::enriques::Violation;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable `{0}` is not assigned")]
    UnassignedVariable(String),

    #[error("variable `{var}` does not occur in the target context {context:?}")]
    ContextMismatch { var: String, context: Vec<String> },

    #[error("divisor is not monic in `{0}`")]
    NotMonic(String),

    #[error("divisor is zero")]
    ZeroDivisor,

    #[error("no weight given for variable `{0}`")]
    MissingWeight(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("Bell polynomial order {0} exceeds the supported maximum of {max}", max = crate::bell::MAX_ORDER)]
    BellOrderTooLarge(usize),

    #[error("need at least {needed} values, got {got}")]
    LengthMismatch { needed: usize, got: usize },

    #[error("node count r = {0} is outside the supported range 0..=8")]
    NodeCountOutOfRange(usize),

    #[error("index q = {0} is outside the range 1..=8")]
    IndexOutOfRange(usize),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("class is not of top degree 6: found monomial q1^{q1}*q2^{q2}")]
    NotTopDegree { q1: u32, q2: u32 },

    #[error("value {0} is not an integer")]
    NotInteger(String),

    #[error("invalid Enriques diagram: {0}")]
    InvalidDiagram(Violation),

    #[error("diagram has {0} roots; a single root is required")]
    NotSingleRoot(usize),

    #[error("enumeration limits exceeded: max_vertices <= {max_v}, max_weight <= {max_w}", max_v = crate::enriques::MAX_ENUM_VERTICES, max_w = crate::enriques::MAX_ENUM_WEIGHT)]
    EnumerationLimit,

    #[error("named diagram {0} does not exist")]
    NoSuchNamedDiagram(String),

    #[error("genus must be at least 1, got {0}")]
    GenusTooSmall(i64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

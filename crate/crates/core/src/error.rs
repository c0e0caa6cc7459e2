use thiserror::Error;

/// Errors raised by constructions whose preconditions are violated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex label {0} exceeds the supported maximum of 63")]
    LabelOverflow(u32),

    #[error("unknown vertex label {0}")]
    UnknownVertex(u32),

    #[error("loop at vertex {0}")]
    Loop(u32),

    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(u32, u32),

    #[error("vertex set {0} is not independent")]
    NotIndependent(String),

    #[error("not a graph homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("map is not monotone: element {0} <= {1} but images are not comparable")]
    NotMonotone(usize, usize),

    #[error("{0} is not a face of the complex")]
    NotAFace(String),

    #[error("subcomplex is not contained in the ambient complex: {0}")]
    NotSubcomplex(String),

    #[error("complex is empty")]
    EmptyComplex,

    #[error("unexpected element payload: expected {expected}, found {found}")]
    Payload { expected: &'static str, found: String },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invariant factor {0} does not fit in 64 bits")]
    TorsionOverflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;

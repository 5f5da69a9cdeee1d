use thiserror::Error;

/// Errors raised by ideal arithmetic and the constructions built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring context mismatch: {0}")]
    ContextMismatch(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("variable index {index} out of range for a ring with {n} variables")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,

    #[error("operation requires a proper ideal")]
    UnitIdeal,

    #[error("prime {0} is not associated to the ideal")]
    NotAssociated(String),

    #[error("component {0} is not in the irredundant irreducible decomposition")]
    ComponentNotInDecomposition(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("ideal is not of Borel type")]
    NotBorelType,

    #[error("clutter: {0}")]
    InvalidClutter(String),

    #[error("enumeration over {vertices} vertices exceeds the limit of {limit}")]
    EnumerationLimit { vertices: usize, limit: usize },

    /// A construction that a theorem guarantees produced a wrong result.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

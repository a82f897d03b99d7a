use thiserror::Error;

use crate::repcore::Interval;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("interval [{i},{j}] is not a subinterval of [1,{n}]")]
    InvalidInterval { i: usize, j: usize, n: usize },

    #[error("multiplicity of [{i},{j}] must be positive")]
    ZeroMultiplicity { i: usize, j: usize },

    #[error("dimension mismatch: expected {expected} entries, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("representation is not catenoid: {0} and {1} are incomparable")]
    NotCatenoid(Interval, Interval),

    #[error("the quiver Grassmannian is empty")]
    EmptyInstance,

    #[error("the instance is not simple")]
    NotSimple,

    #[error("the instance does not satisfy the irreducibility criterion")]
    NotIrreducible,

    #[error("enumeration guard exceeded: {predicted} predicted items, limit {limit}")]
    GuardExceeded { predicted: u128, limit: u64 },

    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("{path}: {message}")]
    Invalid { path: String, message: String },

    #[error("unknown family {0:?}, expected degflag or complexes")]
    UnknownFamily(String),

    #[error("invalid argument: {0}")]
    Domain(String),

    #[error("coefficient arithmetic overflowed")]
    Overflow,

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

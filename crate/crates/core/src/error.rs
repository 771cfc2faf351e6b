use thiserror::Error;

use crate::poly::IntPoly;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid cover: {0}")]
    InvalidCover(String),

    #[error("vertex set is not independent: {0:?}")]
    NotIndependent(Vec<usize>),

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("substitution degree {q} is smaller than required {required}")]
    DegreeTooSmall { q: usize, required: usize },

    #[error("declared degree {declared} is smaller than polynomial degree {actual}")]
    DeclaredDegree { declared: usize, actual: usize },

    #[error("independence polynomial input must have constant term 1, got {0}")]
    ConstantTerm(String),

    #[error("polynomial has negative coefficient at index {0}")]
    NegativeCoefficient(usize),

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("oracle bound exceeded: graph has {n} vertices, bound is {bound}")]
    OracleBound { n: usize, bound: usize },

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("{0}")]
    Division(#[from] DivisionError),

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisionError {
    #[error("division by the zero polynomial")]
    ByZero,
    #[error("not divisible over the integers; remainder {remainder}")]
    NotDivisible { remainder: IntPoly },
}

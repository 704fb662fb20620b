use thiserror::Error;

use crate::exact::Solution;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DomError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("witness shape does not match: {0}")]
    WitnessShapeMismatch(String),
    #[error("value outside the codomain of {0}")]
    CodomainViolation(String),
    #[error("graph has an isolated vertex ({0})")]
    IsolatedVertex(usize),
    #[error("node budget exhausted")]
    BudgetExhausted { incumbent: Option<Box<Solution>> },
    #[error("source witness is not feasible for {0}")]
    InfeasibleSource(String),
    #[error("side condition violated: {0}")]
    SideConditionViolated(String),
    #[error("parameter {0} is not defined on this graph")]
    UndefinedParameter(String),
    #[error("size {size} below threshold {min} for family {family}")]
    SizeBelowThreshold { family: String, size: usize, min: usize },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("witness is not feasible")]
    InfeasibleWitness,
    #[error("hypergraph admits a 2-coloring with a class of size below 2")]
    DegenerateHypergraph,
    #[error("{0} is only available through its identity with a base parameter")]
    IdentityOnly(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, DomError>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("division by zero: {0}")]
    ZeroDivision(String),
    #[error("{0}")]
    Pole(String),
    #[error("pole order of the zero function is undefined")]
    ZeroFunction,
    #[error("sampling gave up after {0} retries")]
    Exhaustion(usize),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("permutation is not a single n-cycle: {0}")]
    NotCyclic(String),
    #[error("gamma is not a proper subset of the arcs: {0}")]
    NotProperSubset(String),
    #[error("sigma does not carry gamma1 onto gamma2: {0}")]
    GammaMismatch(String),
    #[error("(n,1) lies in gamma1; request normalization to relabel")]
    UnnormalizedGamma,
    #[error("invalid cut point m = {0}")]
    InvalidM(usize),
    #[error("inadmissible parameter: {0}")]
    SingularParameter(String),
    #[error("subalgebra not closed: {0}")]
    ClosureViolation(String),
    #[error("Levi gluing inconsistent: {0}")]
    LeviMismatch(String),
    #[error("structural audit failed: {0}")]
    AuditFailure(String),
    #[error("operator is not nilpotent: {0}")]
    NotNilpotent(String),
    #[error("tau does not preserve the Gram matrix: {0}")]
    GramViolation(String),
    #[error("tau is not nilpotent: {0}")]
    NotNilpotentTau(String),
    #[error("r0 violates its constraints: {0}")]
    R0ConstraintViolation(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("truncation order too short: {0}")]
    TruncationTooShort(String),
    #[error("closure failure: {0}")]
    ClosureFailure(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

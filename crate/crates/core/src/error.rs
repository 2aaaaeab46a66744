use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("quiver is not acyclic")]
    Cyclic,
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("quiver is not of Dynkin type: {0}")]
    NotDynkin(String),
    #[error("vertex {0} is not a sink")]
    NotASink(usize),
    #[error("vertex {0} is neither a sink nor a source")]
    NotSinkOrSource(usize),
    #[error("vertex {0} out of range")]
    NoSuchVertex(usize),
    #[error("module is not rigid")]
    NotRigid,
    #[error("decomposition has no solution: {0}")]
    NoSolution(String),
    #[error("exceptional ordering found a cycle among summands {0:?}")]
    CycleFound(Vec<usize>),
    #[error("search budget of {0} elements exceeded")]
    BudgetExceeded(u64),
    #[error("index {index} out of range 0..={max}")]
    OutOfRange { index: usize, max: usize },
    #[error("invalid Dynkin type: {0}")]
    InvalidType(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("invalid modulator: {0}")]
    InvalidModulator(String),

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),

    #[error("invalid formula: {0}")]
    InvalidFormula(String),
}

pub type Result<T> = std::result::Result<T, Error>;

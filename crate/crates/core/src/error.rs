use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("the empty graph is not a valid input")]
    EmptyGraph,
    #[error("{what} is limited to {limit} vertices, got {n}")]
    SizeLimit { what: &'static str, n: usize, limit: usize },
    #[error("decomposition exceeded its budget of {limit} nodes")]
    BudgetExceeded { limit: usize },
    #[error("invalid split: {0}")]
    InvalidSplit(String),
    #[error("invalid tree representation: {0}")]
    InvalidTreeRep(String),
    #[error("graph is not in the class: {0}")]
    NotInClass(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid gluing recipe: {0}")]
    InvalidRecipe(String),
    #[error("invalid ear: {0}")]
    InvalidEar(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsatisfiable: {0}")]
    Unsatisfiable(String),
}

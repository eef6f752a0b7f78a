use thiserror::Error;

/// Errors produced while loading graphs or running the hyperbolicity pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has no edges")]
    EmptyGraph,

    #[error("graph is not connected")]
    Disconnected,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(
        "top-level distance matrix needs {entries} entries ({dominators} dominators), \
         above the memory budget of {budget}; use a larger max domination distance"
    )]
    MemoryBudget {
        dominators: usize,
        entries: u128,
        budget: u64,
    },

    #[error("graph has {n} vertices, above the limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("no connected graph after {0} attempts; raise the edge probability")]
    GenerationFailed(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

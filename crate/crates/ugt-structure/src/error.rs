use thiserror::Error;
use ugt_core::CoreError;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum StructError {
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("vertex {0:?} is not a support vertex")]
    NotSupportVertex(String),
    #[error("no path between {0:?} and {1:?}")]
    NoPath(String, String),
    #[error("support graph is disconnected")]
    Disconnected,
    #[error("empty support")]
    EmptySupport,
    #[error("{op} undecided: instance size {actual} exceeds cap {cap}")]
    Undecided {
        op: &'static str,
        cap: usize,
        actual: usize,
    },
    #[error("not a support cycle: {0}")]
    NotACycle(String),
    #[error("bad witness: {0}")]
    BadWitness(String),
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error(transparent)]
    Core(#[from] CoreError),
}

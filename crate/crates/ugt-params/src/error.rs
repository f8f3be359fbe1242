use thiserror::Error;
use ugt_core::CoreError;
use ugt_structure::StructError;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParamError {
    #[error("{op} undecided: instance size {actual} exceeds cap {cap}")]
    Undecided {
        op: &'static str,
        cap: usize,
        actual: usize,
    },
    #[error("no valid structure exists: {0}")]
    Infeasible(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("support graph is disconnected")]
    Disconnected,
    #[error("eigenvalue iteration failed to converge within 100 sweeps")]
    NoConverge,
    #[error(transparent)]
    Struct(#[from] StructError),
    #[error(transparent)]
    Core(#[from] CoreError),
}

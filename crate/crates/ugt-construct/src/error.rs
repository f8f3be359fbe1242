use thiserror::Error;
use ugt_core::{CoreError, Violation};

#[derive(Error, Debug)]
pub enum ConstructError {
    /// A precondition on the construction's input failed.
    #[error("{0}")]
    Input(String),
    /// Per-element rule failures found while ingesting a compound input.
    #[error("incompatible input: {}", render(.0))]
    Incompatible(Vec<Violation>),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl From<Vec<Violation>> for ConstructError {
    fn from(v: Vec<Violation>) -> Self {
        ConstructError::Core(CoreError::Invalid(v))
    }
}

fn render(v: &[Violation]) -> String {
    v.iter()
        .map(|x| format!("{} [{}]", x.rule, x.subject))
        .collect::<Vec<_>>()
        .join("; ")
}

use thiserror::Error;

#[derive(Debug, Error)]
pub enum DecisionError {
    /// Malformed input: bad matrix shapes, out-of-range weights, unknown
    /// names, broken reciprocity, and the like.
    #[error("{0}")]
    Input(String),

    /// The document did not parse against the expected schema.
    #[error("json error: {0}")]
    Json(String),

    /// An iteration cap was reached before the stated tolerance was met.
    /// Callers should treat this as "undecided", never as a wrong answer.
    #[error("{0}")]
    NoConverge(String),
}

pub(crate) fn input(msg: impl Into<String>) -> DecisionError {
    DecisionError::Input(msg.into())
}

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("invalid model: {0}")]
    BadModel(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("path strength of an empty path is undefined")]
    EmptyPath,
    #[error("edge length is undefined on the zero degree")]
    LambdaOnZero,
    #[error("dombi conjunction requires dombi_lambda on the model")]
    DombiUnset,
    #[error("invalid graph: {}", render_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("json error: {0}")]
    Json(String),
}

/// One named rule failure; `subject` identifies the offending vertex or
/// the pair `{u,v}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: String,
    pub subject: String,
}

impl Violation {
    pub fn new(rule: impl Into<String>, subject: impl Into<String>) -> Self {
        Violation {
            rule: rule.into(),
            subject: subject.into(),
        }
    }
}

fn render_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| format!("{} [{}]", x.rule, x.subject))
        .collect::<Vec<_>>()
        .join("; ")
}

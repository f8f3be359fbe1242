//! Core vocabulary for graphs decorated with k-dimensional uncertainty
//! degrees: exact rational degree tuples, model kinds with their domain
//! constraints, a configurable operator bundle, the graph container, and
//! the shared JSON document format.

pub mod degree;
pub mod error;
pub mod graph;
pub mod json;
pub mod model;
pub mod rational;

pub use degree::Degree;
pub use error::{CoreError, Violation};
pub use graph::{Graph, SupportGraph};
pub use model::{
    dombi_t, CombineKind, CombineOp, ConstraintProfile, EvalMap, Model, ModelKind, OperatorBundle,
    PathOp, ScalarOp,
};
pub use rational::{fmt_f64_sig12, fmt_q, parse_q, q_from, q_int, q_one, q_to_f64, q_zero, Q};

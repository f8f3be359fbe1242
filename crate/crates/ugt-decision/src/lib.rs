//! Decision procedures over uncertain data: cognitive-map dynamics
//! (trajectories, fixed points, limit cycles) and the score-induced
//! uncertain ANP pipeline (judgment matrices, supermatrix limits, global
//! priorities).

pub mod docs;
mod error;
mod fcm;
mod matrix;
mod network;
mod number;

pub use error::DecisionError;
pub use fcm::{fcm_run, Activation, CognitiveMap, FcmRun, Terminal};
pub use matrix::{anp_priorities, JudgmentMatrix};
pub use network::{
    anp_limit, AnpLimit, AnpNetwork, Cluster, ClusterJudgment, Dependence, ElementJudgment,
};
pub use number::UncertainNumber;

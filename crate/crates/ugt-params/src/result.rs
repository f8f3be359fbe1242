//! Shared result shapes for the exact parameter solvers.

use std::collections::BTreeMap;
use ugt_core::{Degree, Q};

/// One proper coloring of a level cut, colors numbered from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelColoring {
    pub level: Degree,
    pub colors_used: usize,
    pub coloring: BTreeMap<String, usize>,
}

/// Tree decomposition with two-valued bags: a listed vertex carries its
/// full σ degree, everything else is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// per-node bag contents, vertex ids sorted
    pub bags: Vec<Vec<String>>,
    /// tree edges between bag indices
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    VertexSet(Vec<String>),
    EdgeSet(Vec<(String, String)>),
    Colorings(Vec<LevelColoring>),
    Decomposition(TreeDecomposition),
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamResult {
    pub value: Q,
    pub witness: Witness,
    /// interval answers (planarity on nonplanar supports): [lower, upper]
    pub bounds: Option<(Q, Q)>,
}

impl ParamResult {
    pub fn exact(value: Q, witness: Witness) -> Self {
        ParamResult { value, witness, bounds: None }
    }
}

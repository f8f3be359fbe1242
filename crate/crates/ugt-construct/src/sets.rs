//! Uncertain sets over a common universe and their intersection graph.

use crate::error::ConstructError;
use ugt_core::{Degree, Graph, Model, Violation};

/// A named uncertainty-degree function on a finite universe. `degrees[i]`
/// belongs to `universe[i]`; the name becomes the vertex id when the set
/// enters an intersection graph.
#[derive(Debug, Clone)]
pub struct UncertainSet {
    pub name: String,
    pub universe: Vec<String>,
    pub degrees: Vec<Degree>,
}

impl UncertainSet {
    pub fn new(
        name: impl Into<String>,
        universe: Vec<String>,
        degrees: Vec<Degree>,
    ) -> Result<Self, ConstructError> {
        if universe.len() != degrees.len() {
            return Err(ConstructError::Input(format!(
                "universe has {} elements but {} degrees were given",
                universe.len(),
                degrees.len()
            )));
        }
        Ok(UncertainSet {
            name: name.into(),
            universe,
            degrees,
        })
    }
}

/// Intersection graph of a family of uncertain sets: one vertex per set with
/// σ the componentwise height of its degree function, and an edge degree
/// equal to the height of the pointwise componentwise min of the two sets.
pub fn intersection_graph(model: &Model, sets: &[UncertainSet]) -> Result<Graph, ConstructError> {
    let Some(first) = sets.first() else {
        return Err(ConstructError::Input(
            "intersection graph needs at least one set".into(),
        ));
    };
    let mut bad = Vec::new();
    for s in sets {
        if s.universe != first.universe {
            return Err(ConstructError::Input(format!(
                "set {} is not on the shared universe",
                s.name
            )));
        }
        for (x, d) in s.universe.iter().zip(&s.degrees) {
            if let Err(why) = model.check_degree(d) {
                bad.push(Violation::new(
                    format!("bad set degree: {why}"),
                    format!("{}({x})", s.name),
                ));
            }
        }
    }
    if !bad.is_empty() {
        return Err(ConstructError::Incompatible(bad));
    }

    let vertices = sets
        .iter()
        .map(|s| (s.name.clone(), height(model, &s.degrees)))
        .collect();
    let mut edges = Vec::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let meet: Vec<Degree> = sets[i]
                .degrees
                .iter()
                .zip(&sets[j].degrees)
                .map(|(a, b)| a.component_min(b))
                .collect();
            let eta = height(model, &meet);
            if !eta.is_zero() {
                edges.push((sets[i].name.clone(), sets[j].name.clone(), eta));
            }
        }
    }
    Ok(Graph::new(model.clone(), vertices, edges)?)
}

/// Componentwise max over the universe; the zero degree on an empty one.
fn height(model: &Model, degrees: &[Degree]) -> Degree {
    degrees
        .iter()
        .fold(model.zero(), |acc, d| acc.component_max(d))
}

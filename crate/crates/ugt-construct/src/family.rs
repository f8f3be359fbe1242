//! Indexed families of uncertain graphs — soft (parameterized), dynamic
//! (time-indexed), and knowledge graphs (relation-indexed) — with a common
//! slicing operation.

use crate::error::ConstructError;
use crate::variants::{validate_variant, Arc, VariantGraph, VariantPayload};
use num_traits::Signed;
use ugt_core::{q_one, Degree, Graph, Model, ModelKind, Q, Violation};

/// Checks that a family member is interval-valued and satisfies the
/// componentwise cap M ⪯ Σ∧Σ on every stored edge.
fn check_member(key: &str, g: &Graph, out: &mut Vec<Violation>) {
    if g.model().kind != ModelKind::Interval {
        out.push(Violation::new("family member is not interval-valued", key));
        return;
    }
    for (i, j, d) in g.edges() {
        let cap = g.sigma(i).component_min(g.sigma(j));
        let breaks = d
            .components()
            .iter()
            .zip(cap.components())
            .any(|(e, c)| e > c);
        if breaks {
            out.push(Violation::new(
                "edge interval exceeds Σ∧Σ",
                format!("{key}:{{{},{}}}", g.id(i), g.id(j)),
            ));
        }
    }
}

/// Parameterized family: each key names one interval-valued uncertain graph.
#[derive(Debug, Clone)]
pub struct SoftFamily {
    params: Vec<(String, Graph)>,
}

impl SoftFamily {
    pub fn new(params: Vec<(String, Graph)>) -> Result<Self, ConstructError> {
        ingest(&params, "parameter")?;
        Ok(SoftFamily { params })
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.params.iter().map(|(k, _)| k.as_str())
    }
}

/// Finite time-indexed family of snapshots, same membership rules.
#[derive(Debug, Clone)]
pub struct DynamicGraph {
    snapshots: Vec<(String, Graph)>,
}

impl DynamicGraph {
    pub fn new(snapshots: Vec<(String, Graph)>) -> Result<Self, ConstructError> {
        ingest(&snapshots, "time")?;
        Ok(DynamicGraph { snapshots })
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.snapshots.iter().map(|(k, _)| k.as_str())
    }
}

fn ingest(members: &[(String, Graph)], what: &str) -> Result<(), ConstructError> {
    let mut out = Vec::new();
    for (i, (key, g)) in members.iter().enumerate() {
        if members[..i].iter().any(|(k, _)| k == key) {
            return Err(ConstructError::Input(format!("duplicate {what} key {key}")));
        }
        check_member(key, g, &mut out);
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(ConstructError::Incompatible(out))
    }
}

/// One weighted statement: head --relation--> tail with truth degree in (0,1].
#[derive(Debug, Clone, PartialEq)]
pub struct Triple {
    pub head: String,
    pub relation: String,
    pub tail: String,
    pub mu: Q,
}

/// Entities plus a sparse fuzzy truth map on (head, relation, tail) triples;
/// absent triples carry degree 0.
#[derive(Debug, Clone)]
pub struct KnowledgeGraph {
    entities: Vec<String>,
    triples: Vec<Triple>,
}

impl KnowledgeGraph {
    pub fn new(entities: Vec<String>, triples: Vec<Triple>) -> Result<Self, ConstructError> {
        let mut out = Vec::new();
        for t in &triples {
            let subject = format!("({},{},{})", t.head, t.relation, t.tail);
            if !entities.contains(&t.head) || !entities.contains(&t.tail) {
                out.push(Violation::new("triple endpoint is not an entity", subject));
                continue;
            }
            if t.head == t.tail {
                out.push(Violation::new(
                    "looping triple cannot enter a digraph slice",
                    subject,
                ));
                continue;
            }
            if !t.mu.is_positive() || t.mu > q_one() {
                out.push(Violation::new("truth degree outside (0,1]", subject));
                continue;
            }
            if triples
                .iter()
                .filter(|s| {
                    s.head == t.head && s.relation == t.relation && s.tail == t.tail
                })
                .count()
                > 1
            {
                out.push(Violation::new("duplicate triple", subject));
            }
        }
        if !out.is_empty() {
            return Err(ConstructError::Incompatible(out));
        }
        Ok(KnowledgeGraph { entities, triples })
    }

    pub fn relations(&self) -> Vec<&str> {
        let mut rs: Vec<&str> = self.triples.iter().map(|t| t.relation.as_str()).collect();
        rs.sort_unstable();
        rs.dedup();
        rs
    }
}

#[derive(Debug, Clone)]
pub enum Family {
    Soft(SoftFamily),
    Dynamic(DynamicGraph),
    Knowledge(KnowledgeGraph),
}

/// A slice is an undirected uncertain graph for soft/dynamic families and a
/// fuzzy digraph for knowledge graphs.
#[derive(Debug, Clone)]
pub enum Slice {
    Graph(Graph),
    Digraph(VariantGraph),
}

/// Extract one member: by parameter or time key for soft/dynamic families,
/// by relation name for knowledge graphs.
pub fn family_slice(family: &Family, key: &str) -> Result<Slice, ConstructError> {
    match family {
        Family::Soft(f) => f
            .params
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, g)| Slice::Graph(g.clone()))
            .ok_or_else(|| unknown(key)),
        Family::Dynamic(f) => f
            .snapshots
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, g)| Slice::Graph(g.clone()))
            .ok_or_else(|| unknown(key)),
        Family::Knowledge(kg) => {
            if !kg.triples.iter().any(|t| t.relation == key) {
                return Err(unknown(key));
            }
            let one = Degree::new(vec![q_one()]);
            let base = Graph::new(
                Model::fuzzy(),
                kg.entities
                    .iter()
                    .map(|e| (e.clone(), one.clone()))
                    .collect(),
                Vec::new(),
            )?;
            let arcs = kg
                .triples
                .iter()
                .filter(|t| t.relation == key)
                .map(|t| Arc {
                    s: t.head.clone(),
                    t: t.tail.clone(),
                    alpha: Degree::new(vec![t.mu.clone()]),
                })
                .collect();
            let v = VariantGraph {
                base,
                payload: VariantPayload::Digraph { arcs },
            };
            let report = validate_variant(&v);
            if !report.ok {
                return Err(ConstructError::Incompatible(report.violations));
            }
            Ok(Slice::Digraph(v))
        }
    }
}

fn unknown(key: &str) -> ConstructError {
    ConstructError::Input(format!("unknown slice key {key}"))
}

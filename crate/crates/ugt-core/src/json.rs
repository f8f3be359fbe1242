//! The shared graph JSON document. Rationals travel as strings (`"p/q"` or
//! decimal) and are parsed exactly; unknown fields are rejected.

use crate::degree::Degree;
use crate::error::{CoreError, Violation};
use crate::graph::Graph;
use crate::model::{ConstraintProfile, Model, ModelKind};
use crate::rational::{fmt_q, parse_q};
use serde::Deserialize;
use serde_json::{json, Value};

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub model: ModelDoc,
    pub vertices: Vec<VertexDoc>,
    #[serde(default)]
    pub edges: Vec<EdgeDoc>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct ModelDoc {
    pub kind: String,
    pub k: usize,
    #[serde(default)]
    pub profile: Option<String>,
    #[serde(default)]
    pub dombi_lambda: Option<String>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct VertexDoc {
    pub id: String,
    pub sigma: Vec<String>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub u: String,
    pub v: String,
    pub eta: Vec<String>,
}

impl ModelDoc {
    pub fn build(&self) -> Result<Model, CoreError> {
        let kind = ModelKind::parse(&self.kind)?;
        let profile = match &self.profile {
            Some(p) => ConstraintProfile::parse(p)?,
            None => ConstraintProfile::None,
        };
        let lambda = match &self.dombi_lambda {
            Some(s) => Some(parse_q(s).map_err(CoreError::BadModel)?),
            None => None,
        };
        Model::new(kind, self.k, profile, lambda)
    }
}

pub fn parse_degree(parts: &[String]) -> Result<Degree, String> {
    let mut out = Vec::with_capacity(parts.len());
    for p in parts {
        out.push(parse_q(p)?);
    }
    Ok(Degree::new(out))
}

/// Full pipeline: JSON text → validated graph. Schema problems surface as
/// `Json`, semantic problems as `Invalid` with the offending subjects named.
pub fn graph_from_json(text: &str) -> Result<Graph, CoreError> {
    let doc: GraphDoc =
        serde_json::from_str(text).map_err(|e| CoreError::Json(e.to_string()))?;
    graph_from_doc(&doc)
}

pub fn graph_from_doc(doc: &GraphDoc) -> Result<Graph, CoreError> {
    let model = doc.model.build()?;
    let mut violations = Vec::new();
    let mut vertices = Vec::with_capacity(doc.vertices.len());
    for v in &doc.vertices {
        match parse_degree(&v.sigma) {
            Ok(d) => vertices.push((v.id.clone(), d)),
            Err(why) => violations.push(Violation::new(format!("bad sigma: {why}"), &v.id)),
        }
    }
    let mut edges = Vec::with_capacity(doc.edges.len());
    for e in &doc.edges {
        match parse_degree(&e.eta) {
            Ok(d) => edges.push((e.u.clone(), e.v.clone(), d)),
            Err(why) => violations.push(Violation::new(
                format!("bad eta: {why}"),
                format!("{{{},{}}}", e.u, e.v),
            )),
        }
    }
    if !violations.is_empty() {
        return Err(CoreError::Invalid(violations));
    }
    Graph::new(model, vertices, edges).map_err(CoreError::Invalid)
}

/// Canonical JSON value for a graph. Zero-η pairs are never emitted and
/// the profile is always spelled out.
pub fn graph_to_value(g: &Graph) -> Value {
    let model = g.model();
    let mut model_obj = serde_json::Map::new();
    model_obj.insert("kind".into(), json!(model.kind.as_str()));
    model_obj.insert("k".into(), json!(model.k));
    model_obj.insert("profile".into(), json!(model.profile.as_str()));
    if let Some(l) = &model.dombi_lambda {
        model_obj.insert("dombi_lambda".into(), json!(fmt_q(l)));
    }
    let vertices: Vec<Value> = (0..g.n())
        .map(|i| json!({"id": g.id(i), "sigma": g.sigma(i).render()}))
        .collect();
    let edges: Vec<Value> = g
        .edges()
        .map(|(i, j, d)| json!({"u": g.id(i), "v": g.id(j), "eta": d.render()}))
        .collect();
    json!({"model": Value::Object(model_obj), "vertices": vertices, "edges": edges})
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string_pretty(&graph_to_value(g)).expect("serializable")
}

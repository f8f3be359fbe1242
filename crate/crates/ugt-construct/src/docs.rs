//! JSON documents for the construction inputs: variant graphs, families,
//! random templates, and the per-kind derivation payloads. Schema problems
//! surface as json errors; semantic problems keep their construction errors.

use serde::Deserialize;
use std::collections::BTreeMap;

use crate::error::ConstructError;
use crate::family::{DynamicGraph, Family, KnowledgeGraph, SoftFamily, Triple};
use crate::generate::{generate, GenerateKind};
use crate::group::{cayley_graph, GroupSpec};
use crate::interval::{tolerance_graph, FuzzyInterval};
use crate::line::line_graph;
use crate::random::{DegreeDist, RandomTemplate};
use crate::rough::rough_graph;
use crate::sets::{intersection_graph, UncertainSet};
use crate::variants::{
    Arc, IdArc, Link, PsiEntry, TauEntry, VariantGraph, VariantPayload,
};
use crate::zerodiv::zero_divisor_graph;
use ugt_core::json::{graph_from_doc, parse_degree, EdgeDoc, GraphDoc, ModelDoc, VertexDoc};
use ugt_core::{parse_q, CoreError, Degree, Graph, Q};

fn bad(msg: impl Into<String>) -> ConstructError {
    ConstructError::Core(CoreError::Json(msg.into()))
}

fn degree_of(parts: &[String], what: &str) -> Result<Degree, ConstructError> {
    parse_degree(parts).map_err(|e| bad(format!("{what}: {e}")))
}

fn rational_of(s: &str, what: &str) -> Result<Q, ConstructError> {
    parse_q(s).map_err(|e| bad(format!("{what}: {e}")))
}

fn from_text<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T, ConstructError> {
    serde_json::from_str(text).map_err(|e| bad(e.to_string()))
}

// ---------------------------------------------------------------- variants

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct VariantDoc {
    pub model: ModelDoc,
    pub vertices: Vec<VertexDoc>,
    #[serde(default)]
    pub edges: Vec<EdgeDoc>,
    pub variant: String,
    #[serde(default)]
    pub arcs: Vec<ArcDoc>,
    #[serde(default)]
    pub tau: Vec<TauDoc>,
    #[serde(default)]
    pub incidence: Vec<PsiDoc>,
    #[serde(default)]
    pub sign: Option<SignDoc>,
    #[serde(default)]
    pub weights: Vec<WeightDoc>,
    #[serde(default)]
    pub links: Vec<LinkDoc>,
    #[serde(default)]
    pub labels: Option<LabelsDoc>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct ArcDoc {
    #[serde(default)]
    pub id: Option<String>,
    pub s: String,
    pub t: String,
    pub alpha: Vec<String>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct TauDoc {
    pub v: String,
    pub e: [String; 2],
    pub dir: i64,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct PsiDoc {
    pub v: String,
    pub e: [String; 2],
    pub psi: Vec<String>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct SignDoc {
    #[serde(default)]
    pub vertices: BTreeMap<String, i64>,
    #[serde(default)]
    pub edges: Vec<EdgeSignDoc>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct EdgeSignDoc {
    pub u: String,
    pub v: String,
    pub sign: i64,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct WeightDoc {
    pub u: String,
    pub v: String,
    pub w: String,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct LinkDoc {
    pub id: String,
    pub u: String,
    pub v: String,
    pub eta: Vec<String>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct LabelsDoc {
    #[serde(default)]
    pub vertices: BTreeMap<String, String>,
    #[serde(default)]
    pub edges: Vec<EdgeLabelDoc>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct EdgeLabelDoc {
    pub u: String,
    pub v: String,
    pub label: String,
}

pub fn variant_from_json(text: &str) -> Result<VariantGraph, ConstructError> {
    let doc: VariantDoc = from_text(text)?;
    let base = graph_from_doc(&GraphDoc {
        model: doc.model,
        vertices: doc.vertices,
        edges: doc.edges,
    })?;

    let allowed: &[&str] = match doc.variant.as_str() {
        "digraph" | "mixed" | "oriented" | "arc_identified" => &["arcs"],
        "bidirected" => &["tau"],
        "signed" => &["sign"],
        "weighted" => &["weights"],
        "multigraph" => &["links"],
        "incidence" => &["incidence"],
        "molecular" => &["labels"],
        other => return Err(bad(format!("unknown variant {other}"))),
    };
    let present = [
        (!doc.arcs.is_empty(), "arcs"),
        (!doc.tau.is_empty(), "tau"),
        (!doc.incidence.is_empty(), "incidence"),
        (doc.sign.is_some(), "sign"),
        (!doc.weights.is_empty(), "weights"),
        (!doc.links.is_empty(), "links"),
        (doc.labels.is_some(), "labels"),
    ];
    for (there, field) in present {
        if there && !allowed.contains(&field) {
            return Err(bad(format!(
                "field {field} does not belong to variant {}",
                doc.variant
            )));
        }
    }

    let plain_arcs = |arcs: &[ArcDoc]| -> Result<Vec<Arc>, ConstructError> {
        arcs.iter()
            .map(|a| {
                if a.id.is_some() {
                    return Err(bad(
                        "arc identifiers belong to the arc_identified variant".to_string(),
                    ));
                }
                Ok(Arc {
                    s: a.s.clone(),
                    t: a.t.clone(),
                    alpha: degree_of(&a.alpha, "arc alpha")?,
                })
            })
            .collect()
    };

    let payload = match doc.variant.as_str() {
        "digraph" => VariantPayload::Digraph {
            arcs: plain_arcs(&doc.arcs)?,
        },
        "mixed" => VariantPayload::Mixed {
            arcs: plain_arcs(&doc.arcs)?,
        },
        "oriented" => VariantPayload::Oriented {
            arcs: plain_arcs(&doc.arcs)?,
        },
        "arc_identified" => VariantPayload::ArcIdentified {
            arcs: doc
                .arcs
                .iter()
                .map(|a| {
                    let id = a
                        .id
                        .clone()
                        .ok_or_else(|| bad("arc_identified arcs need an id".to_string()))?;
                    Ok(IdArc {
                        id,
                        s: a.s.clone(),
                        t: a.t.clone(),
                        alpha: degree_of(&a.alpha, "arc alpha")?,
                    })
                })
                .collect::<Result<_, ConstructError>>()?,
        },
        "bidirected" => VariantPayload::Bidirected {
            tau: doc
                .tau
                .iter()
                .map(|t| TauEntry {
                    v: t.v.clone(),
                    e: (t.e[0].clone(), t.e[1].clone()),
                    dir: t.dir,
                })
                .collect(),
        },
        "signed" => {
            let sign = doc.sign.unwrap_or(SignDoc {
                vertices: BTreeMap::new(),
                edges: Vec::new(),
            });
            VariantPayload::Signed {
                vertex_sign: sign.vertices,
                edge_sign: sign
                    .edges
                    .into_iter()
                    .map(|e| (e.u, e.v, e.sign))
                    .collect(),
            }
        }
        "weighted" => VariantPayload::Weighted {
            weights: doc
                .weights
                .iter()
                .map(|w| Ok((w.u.clone(), w.v.clone(), rational_of(&w.w, "edge weight")?)))
                .collect::<Result<_, ConstructError>>()?,
        },
        "multigraph" => VariantPayload::Multigraph {
            links: doc
                .links
                .iter()
                .map(|l| {
                    Ok(Link {
                        id: l.id.clone(),
                        u: l.u.clone(),
                        v: l.v.clone(),
                        eta: degree_of(&l.eta, "link eta")?,
                    })
                })
                .collect::<Result<_, ConstructError>>()?,
        },
        "incidence" => VariantPayload::Incidence {
            psi: doc
                .incidence
                .iter()
                .map(|p| {
                    Ok(PsiEntry {
                        v: p.v.clone(),
                        e: (p.e[0].clone(), p.e[1].clone()),
                        psi: degree_of(&p.psi, "incidence psi")?,
                    })
                })
                .collect::<Result<_, ConstructError>>()?,
        },
        "molecular" => {
            let labels = doc.labels.unwrap_or(LabelsDoc {
                vertices: BTreeMap::new(),
                edges: Vec::new(),
            });
            VariantPayload::Molecular {
                vertex_labels: labels.vertices,
                edge_labels: labels
                    .edges
                    .into_iter()
                    .map(|e| (e.u, e.v, e.label))
                    .collect(),
            }
        }
        _ => unreachable!("variant name screened above"),
    };
    Ok(VariantGraph { base, payload })
}

// ---------------------------------------------------------------- families

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct FamilyDoc {
    pub family: String,
    #[serde(default)]
    pub params: Vec<KeyedGraphDoc>,
    #[serde(default)]
    pub snapshots: Vec<KeyedGraphDoc>,
    #[serde(default)]
    pub entities: Vec<String>,
    #[serde(default)]
    pub triples: Vec<TripleDoc>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct KeyedGraphDoc {
    pub key: String,
    pub graph: GraphDoc,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct TripleDoc {
    pub h: String,
    pub r: String,
    pub t: String,
    pub mu: String,
}

pub fn family_from_json(text: &str) -> Result<Family, ConstructError> {
    let doc: FamilyDoc = from_text(text)?;
    let members = |docs: &[KeyedGraphDoc]| -> Result<Vec<(String, Graph)>, ConstructError> {
        docs.iter()
            .map(|kg| Ok((kg.key.clone(), graph_from_doc(&kg.graph)?)))
            .collect()
    };
    match doc.family.as_str() {
        "soft" => Ok(Family::Soft(SoftFamily::new(members(&doc.params)?)?)),
        "dynamic" => Ok(Family::Dynamic(DynamicGraph::new(members(&doc.snapshots)?)?)),
        "knowledge" => {
            let triples = doc
                .triples
                .iter()
                .map(|t| {
                    Ok(Triple {
                        head: t.h.clone(),
                        relation: t.r.clone(),
                        tail: t.t.clone(),
                        mu: rational_of(&t.mu, "triple mu")?,
                    })
                })
                .collect::<Result<_, ConstructError>>()?;
            Ok(Family::Knowledge(KnowledgeGraph::new(doc.entities, triples)?))
        }
        other => Err(bad(format!("unknown family {other}"))),
    }
}

// ---------------------------------------------------------------- sampling

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct TemplateDoc {
    pub model: ModelDoc,
    pub seed: u64,
    pub vertices: Vec<VertexDistDoc>,
    #[serde(default)]
    pub edges: Vec<EdgeDistDoc>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct VertexDistDoc {
    pub id: String,
    pub dist: DistDoc,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct EdgeDistDoc {
    pub u: String,
    pub v: String,
    pub dist: DistDoc,
}

#[derive(Deserialize, Debug)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum DistDoc {
    #[serde(rename = "point")]
    Point { degree: Vec<String> },
    #[serde(rename = "bernoulli")]
    Bernoulli { p: String, hi: Vec<String> },
    #[serde(rename = "grid")]
    Grid {
        q: u64,
        lo: Vec<String>,
        hi: Vec<String>,
    },
}

fn dist_of(doc: &DistDoc) -> Result<DegreeDist, ConstructError> {
    Ok(match doc {
        DistDoc::Point { degree } => DegreeDist::Point(degree_of(degree, "point degree")?),
        DistDoc::Bernoulli { p, hi } => DegreeDist::Bernoulli {
            p: rational_of(p, "bernoulli p")?,
            hi: degree_of(hi, "bernoulli hi")?,
        },
        DistDoc::Grid { q, lo, hi } => DegreeDist::Grid {
            q: *q,
            lo: degree_of(lo, "grid lo")?,
            hi: degree_of(hi, "grid hi")?,
        },
    })
}

pub fn template_from_json(text: &str) -> Result<RandomTemplate, ConstructError> {
    let doc: TemplateDoc = from_text(text)?;
    Ok(RandomTemplate {
        model: doc.model.build()?,
        seed: doc.seed,
        vertices: doc
            .vertices
            .iter()
            .map(|v| Ok((v.id.clone(), dist_of(&v.dist)?)))
            .collect::<Result<_, ConstructError>>()?,
        edges: doc
            .edges
            .iter()
            .map(|e| Ok((e.u.clone(), e.v.clone(), dist_of(&e.dist)?)))
            .collect::<Result<_, ConstructError>>()?,
    })
}

// ------------------------------------------------------------ derivations

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct IntersectionDoc {
    pub model: ModelDoc,
    pub universe: Vec<String>,
    pub sets: Vec<SetDoc>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct SetDoc {
    pub name: String,
    pub degrees: Vec<Vec<String>>,
}

pub fn intersection_from_json(text: &str) -> Result<Graph, ConstructError> {
    let doc: IntersectionDoc = from_text(text)?;
    let model = doc.model.build()?;
    let sets = doc
        .sets
        .iter()
        .map(|s| {
            let degrees = s
                .degrees
                .iter()
                .map(|d| degree_of(d, &format!("set {} degree", s.name)))
                .collect::<Result<_, ConstructError>>()?;
            UncertainSet::new(s.name.clone(), doc.universe.clone(), degrees)
        })
        .collect::<Result<Vec<_>, ConstructError>>()?;
    intersection_graph(&model, &sets)
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct CayleyDoc {
    pub model: ModelDoc,
    pub factors: Vec<u64>,
    pub subset: Vec<SubsetDoc>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct SubsetDoc {
    pub element: Vec<u64>,
    pub degree: Vec<String>,
}

pub fn cayley_from_json(text: &str) -> Result<Graph, ConstructError> {
    let doc: CayleyDoc = from_text(text)?;
    let model = doc.model.build()?;
    let group = GroupSpec::new(doc.factors)?;
    let subset = doc
        .subset
        .iter()
        .map(|s| Ok((s.element.clone(), degree_of(&s.degree, "subset degree")?)))
        .collect::<Result<Vec<_>, ConstructError>>()?;
    cayley_graph(&model, &group, &subset)
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct ZeroDivisorDoc {
    pub model: ModelDoc,
    pub n: u64,
    pub sigma: Vec<ZdSigmaDoc>,
    #[serde(default = "default_true")]
    pub strong: bool,
    #[serde(default)]
    pub eta: Vec<ZdEtaDoc>,
}

fn default_true() -> bool {
    true
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct ZdSigmaDoc {
    pub element: u64,
    pub degree: Vec<String>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct ZdEtaDoc {
    pub x: u64,
    pub y: u64,
    pub degree: Vec<String>,
}

pub fn zero_divisor_from_json(text: &str) -> Result<Graph, ConstructError> {
    let doc: ZeroDivisorDoc = from_text(text)?;
    let model = doc.model.build()?;
    let mut sigma = BTreeMap::new();
    for s in &doc.sigma {
        if sigma
            .insert(s.element, degree_of(&s.degree, "sigma degree")?)
            .is_some()
        {
            return Err(bad(format!("sigma lists element {} twice", s.element)));
        }
    }
    if doc.strong {
        if !doc.eta.is_empty() {
            return Err(bad("strong zero-divisor graphs derive eta; drop the eta field"));
        }
        zero_divisor_graph(&model, doc.n, &sigma, None)
    } else {
        let mut eta = BTreeMap::new();
        for e in &doc.eta {
            let key = (e.x.min(e.y), e.x.max(e.y));
            if eta
                .insert(key, degree_of(&e.degree, "eta degree")?)
                .is_some()
            {
                return Err(bad(format!("eta lists pair {{{},{}}} twice", e.x, e.y)));
            }
        }
        zero_divisor_graph(&model, doc.n, &sigma, Some(&eta))
    }
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct ToleranceDoc {
    pub intervals: Vec<[String; 4]>,
    pub tolerances: Vec<[String; 4]>,
}

pub fn tolerance_from_json(text: &str) -> Result<Graph, ConstructError> {
    let doc: ToleranceDoc = from_text(text)?;
    let parse_list = |list: &[[String; 4]], what: &str| {
        list.iter()
            .map(|t| {
                FuzzyInterval::new(
                    rational_of(&t[0], what)?,
                    rational_of(&t[1], what)?,
                    rational_of(&t[2], what)?,
                    rational_of(&t[3], what)?,
                )
            })
            .collect::<Result<Vec<_>, ConstructError>>()
    };
    let intervals = parse_list(&doc.intervals, "interval breakpoint")?;
    let tolerances = parse_list(&doc.tolerances, "tolerance breakpoint")?;
    tolerance_graph(&intervals, &tolerances)
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct RoughDoc {
    pub vertices: Vec<RoughVertexDoc>,
    #[serde(default)]
    pub edges: Vec<RoughEdgeDoc>,
    pub vertex_classes: Vec<Vec<String>>,
    #[serde(default)]
    pub edge_classes: Vec<Vec<[String; 2]>>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct RoughVertexDoc {
    pub id: String,
    pub sigma: Vec<String>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct RoughEdgeDoc {
    pub u: String,
    pub v: String,
    pub p: Vec<String>,
}

pub fn rough_from_json(text: &str) -> Result<(Graph, Graph), ConstructError> {
    let doc: RoughDoc = from_text(text)?;
    let vertices = doc
        .vertices
        .iter()
        .map(|v| Ok((v.id.clone(), degree_of(&v.sigma, "vertex interval")?)))
        .collect::<Result<Vec<_>, ConstructError>>()?;
    let edges = doc
        .edges
        .iter()
        .map(|e| Ok((e.u.clone(), e.v.clone(), degree_of(&e.p, "edge interval")?)))
        .collect::<Result<Vec<_>, ConstructError>>()?;
    let edge_classes: Vec<Vec<(String, String)>> = doc
        .edge_classes
        .iter()
        .map(|class| {
            class
                .iter()
                .map(|pair| (pair[0].clone(), pair[1].clone()))
                .collect()
        })
        .collect();
    rough_graph(&vertices, &edges, &doc.vertex_classes, &edge_classes)
}

pub fn line_from_json(text: &str) -> Result<Graph, ConstructError> {
    let g = ugt_core::json::graph_from_json(text)?;
    line_graph(&g)
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct GenerateDoc {
    pub model: ModelDoc,
    pub kind: String,
    #[serde(default)]
    pub sigmas: Vec<Vec<String>>,
    #[serde(default)]
    pub center: Option<Vec<String>>,
    #[serde(default)]
    pub leaves: Vec<Vec<String>>,
    #[serde(default)]
    pub hub: Option<Vec<String>>,
    #[serde(default)]
    pub rim: Vec<Vec<String>>,
}

pub fn generate_from_json(text: &str) -> Result<Graph, ConstructError> {
    let doc: GenerateDoc = from_text(text)?;
    let model = doc.model.build()?;
    let list = |items: &[Vec<String>], what: &str| {
        items
            .iter()
            .map(|d| degree_of(d, what))
            .collect::<Result<Vec<_>, ConstructError>>()
    };
    let kind = match doc.kind.as_str() {
        "complete" => GenerateKind::Complete(list(&doc.sigmas, "sigma")?),
        "star" => {
            let center = doc
                .center
                .as_ref()
                .ok_or_else(|| bad("star needs a center degree"))?;
            GenerateKind::Star(degree_of(center, "center")?, list(&doc.leaves, "leaf")?)
        }
        "wheel" => {
            let hub = doc
                .hub
                .as_ref()
                .ok_or_else(|| bad("wheel needs a hub degree"))?;
            GenerateKind::Wheel(degree_of(hub, "hub")?, list(&doc.rim, "rim")?)
        }
        other => return Err(bad(format!("unknown generator kind {other}"))),
    };
    generate(&model, &kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{family_slice, Slice};
    use crate::random::sample_random;

    #[test]
    fn digraph_doc_round_trip() {
        let text = r#"{
            "model": {"kind": "fuzzy", "k": 1, "profile": "fuzzy_cap"},
            "vertices": [{"id": "a", "sigma": ["0.9"]}, {"id": "b", "sigma": ["0.8"]}],
            "variant": "digraph",
            "arcs": [{"s": "a", "t": "b", "alpha": ["0.5"]}]
        }"#;
        let v = variant_from_json(text).unwrap();
        assert!(crate::variants::validate_variant(&v).ok);
    }

    #[test]
    fn stray_payload_field_is_rejected() {
        let text = r#"{
            "model": {"kind": "fuzzy", "k": 1},
            "vertices": [{"id": "a", "sigma": ["0.9"]}],
            "variant": "digraph",
            "weights": [{"u": "a", "v": "a", "w": "1"}]
        }"#;
        let err = variant_from_json(text).unwrap_err();
        assert!(err.to_string().contains("does not belong"));
    }

    #[test]
    fn unknown_variant_is_rejected() {
        let text = r#"{
            "model": {"kind": "fuzzy", "k": 1},
            "vertices": [{"id": "a", "sigma": ["0.9"]}],
            "variant": "hypergraph"
        }"#;
        assert!(variant_from_json(text).is_err());
    }

    #[test]
    fn soft_family_doc() {
        let text = r#"{
            "family": "soft",
            "params": [{
                "key": "a1",
                "graph": {
                    "model": {"kind": "interval", "k": 2},
                    "vertices": [
                        {"id": "u", "sigma": ["0.3", "0.5"]},
                        {"id": "v", "sigma": ["0.4", "0.6"]}
                    ],
                    "edges": [{"u": "u", "v": "v", "eta": ["0.2", "0.4"]}]
                }
            }]
        }"#;
        let f = family_from_json(text).unwrap();
        match family_slice(&f, "a1").unwrap() {
            Slice::Graph(g) => assert_eq!(g.edge_count(), 1),
            _ => panic!("expected graph slice"),
        }
    }

    #[test]
    fn knowledge_family_doc() {
        let text = r#"{
            "family": "knowledge",
            "entities": ["h", "t"],
            "triples": [{"h": "h", "r": "r", "t": "t", "mu": "0.7"}]
        }"#;
        let f = family_from_json(text).unwrap();
        assert!(matches!(family_slice(&f, "r").unwrap(), Slice::Digraph(_)));
    }

    #[test]
    fn template_doc_samples() {
        let text = r#"{
            "model": {"kind": "fuzzy", "k": 1},
            "seed": 11,
            "vertices": [
                {"id": "a", "dist": {"kind": "point", "degree": ["1"]}},
                {"id": "b", "dist": {"kind": "grid", "q": 2, "lo": ["0"], "hi": ["1"]}}
            ],
            "edges": [
                {"u": "a", "v": "b", "dist": {"kind": "bernoulli", "p": "1", "hi": ["0.5"]}}
            ]
        }"#;
        let t = template_from_json(text).unwrap();
        let (g, s) = sample_random(&t).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(s.edges.len(), 1);
    }

    #[test]
    fn tolerance_doc_builds() {
        let text = r#"{
            "intervals": [["0", "1", "3", "4"], ["2", "3", "5", "6"]],
            "tolerances": [["0", "0", "1", "2"], ["0", "0", "1", "3"]]
        }"#;
        let g = tolerance_from_json(text).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn zero_divisor_doc_strong() {
        let text = r#"{
            "model": {"kind": "fuzzy", "k": 1, "profile": "fuzzy_cap"},
            "n": 6,
            "sigma": [
                {"element": 2, "degree": ["0.8"]},
                {"element": 3, "degree": ["0.9"]},
                {"element": 4, "degree": ["0.7"]}
            ]
        }"#;
        let g = zero_divisor_from_json(text).unwrap();
        assert_eq!(g.ids(), ["2", "3", "4"]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn generate_doc_wheel() {
        let text = r#"{
            "model": {"kind": "fuzzy", "k": 1, "profile": "fuzzy_cap"},
            "kind": "wheel",
            "hub": ["0.9"],
            "rim": [["0.8"], ["0.7"], ["0.6"]]
        }"#;
        let g = generate_from_json(text).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn cayley_doc_z5() {
        let text = r#"{
            "model": {"kind": "fuzzy", "k": 1, "profile": "fuzzy_cap"},
            "factors": [5],
            "subset": [
                {"element": [1], "degree": ["0.8"]},
                {"element": [4], "degree": ["0.8"]}
            ]
        }"#;
        let g = cayley_from_json(text).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn rough_doc_builds_both_graphs() {
        let text = r#"{
            "vertices": [
                {"id": "a", "sigma": ["0.2", "0.4"]},
                {"id": "b", "sigma": ["0.5", "0.8"]}
            ],
            "edges": [{"u": "a", "v": "b", "p": ["0.1", "0.3"]}],
            "vertex_classes": [["a"], ["b"]],
            "edge_classes": [[["a", "b"]]]
        }"#;
        let (lo, hi) = rough_from_json(text).unwrap();
        assert_eq!(lo.edge_count(), 1);
        assert_eq!(hi.edge_count(), 1);
    }

    #[test]
    fn intersection_doc_builds() {
        let text = r#"{
            "model": {"kind": "fuzzy", "k": 1, "profile": "fuzzy_cap"},
            "universe": ["x"],
            "sets": [
                {"name": "A", "degrees": [["0.6"]]},
                {"name": "B", "degrees": [["0.4"]]}
            ]
        }"#;
        let g = intersection_from_json(text).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.eta_or_zero(0, 1).components()[0], parse_q("2/5").unwrap());
    }
}

//! Graph variants layered over a base uncertain graph — directed, bidirected,
//! arc-identified, mixed, oriented, signed, weighted, multigraph, incidence,
//! molecular — each with its own validation rules.

use num_traits::Signed;
use std::collections::{BTreeMap, BTreeSet};
use ugt_core::{ConstraintProfile, Degree, Graph, Model, Q, Violation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub s: String,
    pub t: String,
    pub alpha: Degree,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdArc {
    pub id: String,
    pub s: String,
    pub t: String,
    pub alpha: Degree,
}

/// Local orientation of one endpoint of one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauEntry {
    pub v: String,
    pub e: (String, String),
    pub dir: i64,
}

/// Incidence degree of one (vertex, edge) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiEntry {
    pub v: String,
    pub e: (String, String),
    pub psi: Degree,
}

/// One labelled parallel edge of a multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Link {
    pub id: String,
    pub u: String,
    pub v: String,
    pub eta: Degree,
}

#[derive(Debug, Clone)]
pub enum VariantPayload {
    Digraph { arcs: Vec<Arc> },
    Bidirected { tau: Vec<TauEntry> },
    ArcIdentified { arcs: Vec<IdArc> },
    /// Base edges form the undirected part; the arcs form the directed part.
    Mixed { arcs: Vec<Arc> },
    Oriented { arcs: Vec<Arc> },
    Signed {
        vertex_sign: BTreeMap<String, i64>,
        edge_sign: Vec<(String, String, i64)>,
    },
    Weighted { weights: Vec<(String, String, Q)> },
    Multigraph { links: Vec<Link> },
    Incidence { psi: Vec<PsiEntry> },
    Molecular {
        vertex_labels: BTreeMap<String, String>,
        edge_labels: Vec<(String, String, String)>,
    },
}

#[derive(Debug, Clone)]
pub struct VariantGraph {
    pub base: Graph,
    pub payload: VariantPayload,
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl VariantPayload {
    pub fn kind(&self) -> &'static str {
        match self {
            VariantPayload::Digraph { .. } => "digraph",
            VariantPayload::Bidirected { .. } => "bidirected",
            VariantPayload::ArcIdentified { .. } => "arc_identified",
            VariantPayload::Mixed { .. } => "mixed",
            VariantPayload::Oriented { .. } => "oriented",
            VariantPayload::Signed { .. } => "signed",
            VariantPayload::Weighted { .. } => "weighted",
            VariantPayload::Multigraph { .. } => "multigraph",
            VariantPayload::Incidence { .. } => "incidence",
            VariantPayload::Molecular { .. } => "molecular",
        }
    }
}

/// The componentwise cap a profile imposes between endpoint degrees and a
/// connecting degree, restated for ordered arcs.
fn cap_rule(model: &Model, su: &Degree, sv: &Degree, d: &Degree) -> Option<String> {
    match model.profile {
        ConstraintProfile::None => None,
        ConstraintProfile::FuzzyCap => {
            let cap = su.component_min(sv);
            d.components()
                .iter()
                .zip(cap.components())
                .any(|(e, c)| e > c)
                .then(|| "arc degree exceeds componentwise min of endpoints".to_string())
        }
        ConstraintProfile::IntuitionisticCap => {
            let mu_cap = su.components()[0].clone().min(sv.components()[0].clone());
            let nu_floor = su.components()[1].clone().max(sv.components()[1].clone());
            if d.components()[0] > mu_cap {
                Some("arc mu exceeds min of endpoint mu".into())
            } else if d.components()[1] < nu_floor {
                Some("arc nu below max of endpoint nu".into())
            } else {
                None
            }
        }
        ConstraintProfile::SvnCap => {
            let t_cap = su.components()[0].clone().min(sv.components()[0].clone());
            let i_cap = su.components()[1].clone().min(sv.components()[1].clone());
            let f_floor = su.components()[2].clone().max(sv.components()[2].clone());
            if d.components()[0] > t_cap {
                Some("arc T exceeds min of endpoint T".into())
            } else if d.components()[1] > i_cap {
                Some("arc I exceeds min of endpoint I".into())
            } else if d.components()[2] < f_floor {
                Some("arc F below max of endpoint F".into())
            } else {
                None
            }
        }
    }
}

fn arc_subject(s: &str, t: &str) -> String {
    format!("({s},{t})")
}

fn pair_subject(u: &str, v: &str) -> String {
    format!("{{{u},{v}}}")
}

fn incidence_subject(v: &str, u: &str, w: &str) -> String {
    format!("({v}, {{{u},{w}}})")
}

/// Shared arc checks; returns the surviving (nonzero, well-formed) arcs as
/// ordered index pairs for the caller's own structural rules.
fn check_arcs(g: &Graph, arcs: &[Arc], out: &mut Vec<Violation>) -> Vec<(usize, usize)> {
    let model = g.model();
    let mut seen = BTreeSet::new();
    let mut pairs = Vec::new();
    for a in arcs {
        let subject = arc_subject(&a.s, &a.t);
        let (Some(i), Some(j)) = (g.vertex(&a.s), g.vertex(&a.t)) else {
            out.push(Violation::new("arc endpoint not declared", subject));
            continue;
        };
        if i == j {
            out.push(Violation::new("self-loop arc", subject));
            continue;
        }
        if let Err(why) = model.check_degree(&a.alpha) {
            out.push(Violation::new(format!("bad arc degree: {why}"), subject));
            continue;
        }
        if !seen.insert((i, j)) {
            out.push(Violation::new("duplicate arc", subject));
            continue;
        }
        if a.alpha.is_zero() {
            continue; // absent arc, same normalization as edges
        }
        if let Some(rule) = cap_rule(model, g.sigma(i), g.sigma(j), &a.alpha) {
            out.push(Violation::new(rule, subject));
            continue;
        }
        pairs.push((i, j));
    }
    pairs
}

pub fn validate_variant(v: &VariantGraph) -> ValidationReport {
    let g = &v.base;
    let mut out = Vec::new();
    match &v.payload {
        VariantPayload::Digraph { arcs } => {
            check_arcs(g, arcs, &mut out);
        }
        VariantPayload::Oriented { arcs } => {
            let pairs = check_arcs(g, arcs, &mut out);
            let set: BTreeSet<&(usize, usize)> = pairs.iter().collect();
            for &(i, j) in &pairs {
                if i < j && set.contains(&(j, i)) {
                    out.push(Violation::new(
                        "orientation carries both opposite arcs",
                        pair_subject(g.id(i), g.id(j)),
                    ));
                }
            }
        }
        VariantPayload::Mixed { arcs } => {
            let pairs = check_arcs(g, arcs, &mut out);
            for &(i, j) in &pairs {
                if g.eta(i.min(j), i.max(j)).is_some() {
                    out.push(Violation::new(
                        "pair carries both an undirected edge and an arc",
                        pair_subject(g.id(i.min(j)), g.id(i.max(j))),
                    ));
                }
            }
        }
        VariantPayload::ArcIdentified { arcs } => {
            let model = g.model();
            let mut ids = BTreeSet::new();
            for a in arcs {
                let subject = arc_subject(&a.s, &a.t);
                if a.id.is_empty() {
                    out.push(Violation::new("empty arc identifier", subject));
                    continue;
                }
                if !ids.insert(&a.id) {
                    out.push(Violation::new("duplicate arc identifier", &a.id));
                    continue;
                }
                let (Some(i), Some(j)) = (g.vertex(&a.s), g.vertex(&a.t)) else {
                    out.push(Violation::new("arc endpoint not declared", subject));
                    continue;
                };
                if i == j {
                    out.push(Violation::new("self-loop arc", subject));
                    continue;
                }
                if let Err(why) = model.check_degree(&a.alpha) {
                    out.push(Violation::new(format!("bad arc degree: {why}"), subject));
                    continue;
                }
                if !a.alpha.is_zero() {
                    if let Some(rule) = cap_rule(model, g.sigma(i), g.sigma(j), &a.alpha) {
                        out.push(Violation::new(rule, subject));
                    }
                }
            }
        }
        VariantPayload::Bidirected { tau } => {
            let mut covered = BTreeSet::new();
            for entry in tau {
                let (u, w) = (&entry.e.0, &entry.e.1);
                let subject = incidence_subject(&entry.v, u, w);
                let (Some(i), Some(j)) = (g.vertex(u), g.vertex(w)) else {
                    out.push(Violation::new("bidirection on undeclared pair", subject));
                    continue;
                };
                if g.eta(i.min(j), i.max(j)).is_none() {
                    out.push(Violation::new("bidirection on a non-edge", subject));
                    continue;
                }
                let Some(x) = g.vertex(&entry.v) else {
                    out.push(Violation::new("bidirection at undeclared vertex", subject));
                    continue;
                };
                if x != i && x != j {
                    out.push(Violation::new("bidirection at a non-endpoint", subject));
                    continue;
                }
                if entry.dir != 1 && entry.dir != -1 {
                    out.push(Violation::new("bidirection outside {-1,1}", subject));
                    continue;
                }
                if !covered.insert((x, (i.min(j), i.max(j)))) {
                    out.push(Violation::new("duplicate bidirection entry", subject));
                }
            }
            for (i, j, _) in g.edges() {
                for x in [i, j] {
                    if !covered.contains(&(x, (i, j))) {
                        out.push(Violation::new(
                            "missing bidirection at endpoint",
                            incidence_subject(g.id(x), g.id(i), g.id(j)),
                        ));
                    }
                }
            }
        }
        VariantPayload::Signed {
            vertex_sign,
            edge_sign,
        } => {
            for (id, s) in vertex_sign {
                if g.vertex(id).is_none() {
                    out.push(Violation::new("sign on undeclared vertex", id));
                } else if *s != 1 && *s != -1 {
                    out.push(Violation::new("sign outside {-1,1}", id));
                }
            }
            for id in g.ids() {
                if !vertex_sign.contains_key(id) {
                    out.push(Violation::new("missing vertex sign", id));
                }
            }
            let mut covered = BTreeSet::new();
            for (u, v, s) in edge_sign {
                let subject = pair_subject(u, v);
                let Some(key) = edge_key(g, u, v) else {
                    out.push(Violation::new("sign on a non-edge", subject));
                    continue;
                };
                if *s != 1 && *s != -1 {
                    out.push(Violation::new("sign outside {-1,1}", subject));
                    continue;
                }
                if !covered.insert(key) {
                    out.push(Violation::new("duplicate edge sign", subject));
                }
            }
            for (i, j, _) in g.edges() {
                if !covered.contains(&(i, j)) {
                    out.push(Violation::new(
                        "missing edge sign",
                        pair_subject(g.id(i), g.id(j)),
                    ));
                }
            }
        }
        VariantPayload::Weighted { weights } => {
            let mut covered = BTreeSet::new();
            for (u, v, w) in weights {
                let subject = pair_subject(u, v);
                let Some(key) = edge_key(g, u, v) else {
                    out.push(Violation::new("weight on a non-edge", subject));
                    continue;
                };
                if w.is_negative() {
                    out.push(Violation::new("negative edge weight", subject));
                    continue;
                }
                if !covered.insert(key) {
                    out.push(Violation::new("duplicate edge weight", subject));
                }
            }
            for (i, j, _) in g.edges() {
                if !covered.contains(&(i, j)) {
                    out.push(Violation::new(
                        "missing edge weight",
                        pair_subject(g.id(i), g.id(j)),
                    ));
                }
            }
        }
        VariantPayload::Multigraph { links } => {
            let model = g.model();
            let mut ids = BTreeSet::new();
            for l in links {
                let subject = pair_subject(&l.u, &l.v);
                if l.id.is_empty() {
                    out.push(Violation::new("empty link label", subject));
                    continue;
                }
                if !ids.insert(&l.id) {
                    out.push(Violation::new("duplicate link label", &l.id));
                    continue;
                }
                let (Some(i), Some(j)) = (g.vertex(&l.u), g.vertex(&l.v)) else {
                    out.push(Violation::new("link endpoint not declared", subject));
                    continue;
                };
                if i == j {
                    out.push(Violation::new("self-loop link", subject));
                    continue;
                }
                if let Err(why) = model.check_degree(&l.eta) {
                    out.push(Violation::new(format!("bad link degree: {why}"), subject));
                }
            }
        }
        VariantPayload::Incidence { psi } => {
            let model = g.model();
            let fuzzy_cap = model.profile == ConstraintProfile::FuzzyCap;
            let mut seen = BTreeSet::new();
            for entry in psi {
                let (u, w) = (&entry.e.0, &entry.e.1);
                let subject = incidence_subject(&entry.v, u, w);
                let (Some(i), Some(j)) = (g.vertex(u), g.vertex(w)) else {
                    out.push(Violation::new("incidence on undeclared pair", subject));
                    continue;
                };
                let key = (i.min(j), i.max(j));
                let Some(eta) = g.eta(key.0, key.1) else {
                    out.push(Violation::new("incidence on a non-edge", subject));
                    continue;
                };
                let Some(x) = g.vertex(&entry.v) else {
                    out.push(Violation::new("incidence at undeclared vertex", subject));
                    continue;
                };
                if x != i && x != j {
                    out.push(Violation::new("incidence at a non-endpoint", subject));
                    continue;
                }
                if let Err(why) = model.check_degree(&entry.psi) {
                    out.push(Violation::new(
                        format!("bad incidence degree: {why}"),
                        subject,
                    ));
                    continue;
                }
                if !seen.insert((x, key)) {
                    out.push(Violation::new("duplicate incidence entry", subject));
                    continue;
                }
                if fuzzy_cap {
                    let cap = g.sigma(x).component_min(eta);
                    let breaks = entry
                        .psi
                        .components()
                        .iter()
                        .zip(cap.components())
                        .any(|(p, c)| p > c);
                    if breaks {
                        out.push(Violation::new(
                            "incidence degree exceeds min of vertex and edge",
                            subject,
                        ));
                    }
                }
            }
        }
        VariantPayload::Molecular {
            vertex_labels,
            edge_labels,
        } => {
            for (id, label) in vertex_labels {
                if g.vertex(id).is_none() {
                    out.push(Violation::new("label on undeclared vertex", id));
                } else if label.is_empty() {
                    out.push(Violation::new("empty vertex label", id));
                }
            }
            for id in g.ids() {
                if !vertex_labels.contains_key(id) {
                    out.push(Violation::new("missing vertex label", id));
                }
            }
            let mut covered = BTreeSet::new();
            for (u, v, label) in edge_labels {
                let subject = pair_subject(u, v);
                let Some(key) = edge_key(g, u, v) else {
                    out.push(Violation::new("label on a non-edge", subject));
                    continue;
                };
                if label.is_empty() {
                    out.push(Violation::new("empty edge label", subject));
                    continue;
                }
                if !covered.insert(key) {
                    out.push(Violation::new("duplicate edge label", subject));
                }
            }
            for (i, j, eta) in g.edges() {
                let subject = pair_subject(g.id(i), g.id(j));
                if !covered.contains(&(i, j)) {
                    out.push(Violation::new("missing edge label", subject.clone()));
                }
                let gamma = g.model().gamma(g.sigma(i), g.sigma(j));
                let breaks = eta
                    .components()
                    .iter()
                    .zip(gamma.components())
                    .any(|(e, c)| e > c);
                if breaks {
                    out.push(Violation::new(
                        "edge degree exceeds the complete-edge degree of its endpoints",
                        subject,
                    ));
                }
            }
        }
    }
    ValidationReport {
        ok: out.is_empty(),
        violations: out,
    }
}

fn edge_key(g: &Graph, u: &str, v: &str) -> Option<(usize, usize)> {
    let (i, j) = (g.vertex(u)?, g.vertex(v)?);
    let key = (i.min(j), i.max(j));
    g.eta(key.0, key.1).map(|_| key)
}

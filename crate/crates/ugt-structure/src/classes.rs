//! Numeric aggregates and graph-class predicates: degree/order/size,
//! balanced density, completeness/clique/Dombi/product/labeling checks,
//! spanning-tree verification, and threshold representations.

use crate::error::StructError;
use std::cmp::Ordering;
use ugt_core::{dombi_t, q_one, q_zero, Graph, Q};

/// Per-vertex degree Σ Δ(η), order Σ Δ(σ), size Σ Δ(η).
pub fn degree_order_size(g: &Graph) -> (Vec<Q>, Q, Q) {
    let mut deg = vec![q_zero(); g.n()];
    let mut size = q_zero();
    for (i, j, d) in g.edges() {
        let v = g.model().delta(d);
        deg[i] += v.clone();
        deg[j] += v.clone();
        size += v;
    }
    let order = (0..g.n()).map(|i| g.model().delta(g.sigma(i))).sum();
    (deg, order, size)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum DensityConvention {
    /// unordered distinct support pairs plus one diagonal term per vertex
    #[default]
    DistinctDiagonal,
    /// unordered distinct support pairs only
    DistinctOnly,
}

impl DensityConvention {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "distinct_diagonal" => DensityConvention::DistinctDiagonal,
            "distinct_only" => DensityConvention::DistinctOnly,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug)]
pub struct DensityReport {
    pub density: Q,
    pub balanced: bool,
    /// support subset whose induced density exceeds the graph's, if any
    pub violating: Option<Vec<String>>,
}

/// Density of the sub-selection `verts` (support indices) with all induced
/// support edges kept. `None` means a 0/0 denominator with positive
/// numerator — denser than everything.
fn subset_density(
    g: &Graph,
    verts: &[usize],
    convention: DensityConvention,
) -> Option<Q> {
    let inset = |v: usize| verts.contains(&v);
    let mut numer = q_zero();
    for (i, j, d) in g.edges() {
        if g.is_support_vertex(i) && g.is_support_vertex(j) && inset(i) && inset(j) {
            numer += g.model().delta(d);
        }
    }
    numer = numer * Q::from_integer(2.into());
    let mut denom = q_zero();
    for (a, &u) in verts.iter().enumerate() {
        for &v in &verts[a + 1..] {
            denom += g.model().delta(&g.model().gamma(g.sigma(u), g.sigma(v)));
        }
        if convention == DensityConvention::DistinctDiagonal {
            denom += g.model().delta(&g.model().gamma(g.sigma(u), g.sigma(u)));
        }
    }
    if denom == q_zero() {
        if numer == q_zero() {
            Some(q_zero())
        } else {
            None
        }
    } else {
        Some(numer / denom)
    }
}

/// Density 2ΣΔ(η)/ΣΔ(Γ(σ,σ')) and the balanced predicate (every nonempty
/// induced selection is no denser than the whole graph).
pub fn density_balanced(
    g: &Graph,
    convention: DensityConvention,
) -> Result<DensityReport, StructError> {
    let support: Vec<usize> = (0..g.n()).filter(|&i| g.is_support_vertex(i)).collect();
    if support.is_empty() {
        return Err(StructError::EmptySupport);
    }
    if support.len() > 8 {
        return Err(StructError::Undecided {
            op: "density_balanced",
            cap: 8,
            actual: support.len(),
        });
    }
    let density = subset_density(g, &support, convention).ok_or(StructError::Degenerate(
        "density denominator is zero while edges have positive weight",
    ))?;

    // dropping edges only lowers a selection's density, so scanning vertex
    // subsets with all induced edges covers every subgraph
    let n = support.len();
    for mask in 1u32..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|&b| mask >> b & 1 == 1).map(|b| support[b]).collect();
        let over = match subset_density(g, &subset, convention) {
            Some(d) => d > density,
            None => true,
        };
        if over {
            return Ok(DensityReport {
                density,
                balanced: false,
                violating: Some(subset.into_iter().map(|v| g.id(v).to_string()).collect()),
            });
        }
    }
    Ok(DensityReport {
        density,
        balanced: true,
        violating: None,
    })
}

#[derive(Clone, Debug)]
pub enum ClassSpec {
    Complete,
    Clique(Vec<String>),
    Dombi,
    Product,
    Labeling,
    SpanningTree(Vec<(String, String)>),
    Threshold(Q),
}

#[derive(Clone, Debug)]
pub struct ClassReport {
    pub ok: bool,
    /// counterexample notes when the check fails, context when it holds
    pub notes: Vec<String>,
}

fn pass(note: String) -> ClassReport {
    ClassReport { ok: true, notes: vec![note] }
}

fn fail(note: String) -> ClassReport {
    ClassReport { ok: false, notes: vec![note] }
}

/// Every distinct pair in `verts` carries exactly the complete-edge degree.
fn complete_on(g: &Graph, verts: &[usize]) -> Option<(usize, usize)> {
    for (a, &u) in verts.iter().enumerate() {
        for &v in &verts[a + 1..] {
            let want = g.model().gamma(g.sigma(u), g.sigma(v));
            if g.eta_or_zero(u, v) != want {
                return Some((u, v));
            }
        }
    }
    None
}

pub fn class_check(g: &Graph, spec: &ClassSpec) -> Result<ClassReport, StructError> {
    let m = g.model();
    let pair = |u: usize, v: usize| format!("{{{},{}}}", g.id(u), g.id(v));
    Ok(match spec {
        ClassSpec::Complete => {
            let all: Vec<usize> = (0..g.n()).collect();
            match complete_on(g, &all) {
                None => pass("every distinct pair carries the complete-edge degree".into()),
                Some((u, v)) => fail(format!("{} differs from the complete-edge degree", pair(u, v))),
            }
        }
        ClassSpec::Clique(ids) => {
            if ids.is_empty() {
                return Err(StructError::BadWitness("clique check needs a nonempty subset".into()));
            }
            let mut verts = Vec::with_capacity(ids.len());
            for id in ids {
                verts.push(
                    g.vertex(id)
                        .ok_or_else(|| StructError::UnknownVertex(id.clone()))?,
                );
            }
            verts.sort_unstable();
            verts.dedup();
            match complete_on(g, &verts) {
                None => pass(format!("induced selection of {} vertices is complete", verts.len())),
                Some((u, v)) => fail(format!("{} differs from the complete-edge degree", pair(u, v))),
            }
        }
        ClassSpec::Dombi => {
            let lambda = g
                .model()
                .dombi_lambda
                .clone()
                .unwrap_or_else(q_one);
            for (i, j, d) in g.edges() {
                let cap: Vec<Q> = g
                    .sigma(i)
                    .components()
                    .iter()
                    .zip(g.sigma(j).components())
                    .map(|(a, b)| dombi_t(&lambda, a, b))
                    .collect();
                let cap = ugt_core::Degree::new(cap);
                if m.compare(d, &cap) == Ordering::Greater {
                    return Ok(fail(format!("{} exceeds the Dombi bound of its endpoints", pair(i, j))));
                }
            }
            pass("every edge sits below the Dombi bound of its endpoints".into())
        }
        ClassSpec::Product => {
            for (i, j, d) in g.edges() {
                let ok = d
                    .components()
                    .iter()
                    .zip(g.sigma(i).components().iter().zip(g.sigma(j).components()))
                    .all(|(e, (a, b))| *e <= a * b);
                if !ok {
                    return Ok(fail(format!("{} exceeds the product of its endpoints", pair(i, j))));
                }
            }
            pass("every edge sits below the product of its endpoints".into())
        }
        ClassSpec::Labeling => {
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    if g.sigma(u) == g.sigma(v) {
                        return Ok(fail(format!(
                            "vertex labels of {} and {} coincide",
                            g.id(u),
                            g.id(v)
                        )));
                    }
                }
            }
            let edges: Vec<_> = g.edges().collect();
            for (a, &(i, j, d)) in edges.iter().enumerate() {
                for &(p, q, e) in &edges[a + 1..] {
                    if d == e {
                        return Ok(fail(format!(
                            "edge labels of {} and {} coincide",
                            pair(i, j),
                            pair(p, q)
                        )));
                    }
                }
            }
            for &(i, j, d) in &edges {
                for v in 0..g.n() {
                    if g.sigma(v) == d {
                        return Ok(fail(format!(
                            "edge label of {} equals the vertex label of {}",
                            pair(i, j),
                            g.id(v)
                        )));
                    }
                }
                for &end in &[i, j] {
                    if m.compare(d, g.sigma(end)) != Ordering::Less {
                        return Ok(fail(format!(
                            "edge label of {} is not strictly below the label of {}",
                            pair(i, j),
                            g.id(end)
                        )));
                    }
                }
            }
            pass("labels are injective, disjoint, and edge labels sit strictly below endpoints".into())
        }
        ClassSpec::SpanningTree(pairs) => {
            let mut kept = Vec::new();
            let mut dropped = 0usize;
            for (u, v) in pairs {
                let iu = g
                    .vertex(u)
                    .ok_or_else(|| StructError::UnknownVertex(u.clone()))?;
                let iv = g
                    .vertex(v)
                    .ok_or_else(|| StructError::UnknownVertex(v.clone()))?;
                let key = (iu.min(iv), iu.max(iv));
                if g.eta(key.0, key.1).is_some()
                    && g.is_support_vertex(key.0)
                    && g.is_support_vertex(key.1)
                {
                    kept.push(key);
                } else {
                    // a zero-degree pair contributes nothing to the subgraph
                    dropped += 1;
                }
            }
            kept.sort_unstable();
            kept.dedup();
            let support: Vec<usize> = (0..g.n()).filter(|&i| g.is_support_vertex(i)).collect();
            if support.is_empty() {
                return Ok(fail("the support graph has no vertices to span".into()));
            }
            let mut pos = vec![usize::MAX; g.n()];
            for (p, &v) in support.iter().enumerate() {
                pos[v] = p;
            }
            let dense: Vec<(usize, usize)> = kept.iter().map(|&(a, b)| (pos[a], pos[b])).collect();
            let ok = kept.len() == support.len() - 1
                && crate::paths::spans_connected_on(support.len(), &dense);
            if ok {
                let mut notes = vec![format!("{} edges span the {} support vertices", kept.len(), support.len())];
                if dropped > 0 {
                    notes.push(format!("{dropped} zero-degree pairs were ignored"));
                }
                ClassReport { ok: true, notes }
            } else {
                fail("kept support edges do not form a spanning tree".into())
            }
        }
        ClassSpec::Threshold(t) => {
            if *t < q_zero() {
                return Err(StructError::BadWitness("threshold must be nonnegative".into()));
            }
            if g.n() > 16 {
                return Err(StructError::Undecided {
                    op: "class_check(threshold)",
                    cap: 16,
                    actual: g.n(),
                });
            }
            match threshold_counterexample(g, t) {
                None => pass("subset weight is at most the threshold exactly on stable sets".into()),
                Some((subset, stable)) => {
                    let members: Vec<&str> = subset.iter().map(|&v| g.id(v)).collect();
                    fail(format!(
                        "{{{}}} is {} but its weight is {} the threshold",
                        members.join(","),
                        if stable { "stable" } else { "unstable" },
                        if stable { "above" } else { "at most" }
                    ))
                }
            }
        }
    })
}

/// First subset of V violating the threshold equivalence, with its
/// stability flag.
fn threshold_counterexample(g: &Graph, t: &Q) -> Option<(Vec<usize>, bool)> {
    let n = g.n();
    let weights: Vec<Q> = (0..n).map(|v| g.model().omega(g.sigma(v))).collect();
    let edges: Vec<(usize, usize)> = g.edges().map(|(i, j, _)| (i, j)).collect();
    for mask in 0u32..(1 << n) {
        let inset = |v: usize| mask >> v & 1 == 1;
        let weight: Q = (0..n).filter(|&v| inset(v)).map(|v| weights[v].clone()).sum();
        let stable = edges.iter().all(|&(a, b)| !(inset(a) && inset(b)));
        if (weight <= *t) != stable {
            return Some(((0..n).filter(|&v| inset(v)).collect(), stable));
        }
    }
    None
}

/// The canonical threshold (the maximum stable-set weight) when one exists.
pub fn find_threshold(g: &Graph) -> Result<Option<Q>, StructError> {
    let n = g.n();
    if n > 16 {
        return Err(StructError::Undecided {
            op: "find_threshold",
            cap: 16,
            actual: n,
        });
    }
    let weights: Vec<Q> = (0..n).map(|v| g.model().omega(g.sigma(v))).collect();
    let edges: Vec<(usize, usize)> = g.edges().map(|(i, j, _)| (i, j)).collect();
    let mut max_stable = q_zero();
    let mut min_unstable: Option<Q> = None;
    for mask in 0u32..(1 << n) {
        let inset = |v: usize| mask >> v & 1 == 1;
        let weight: Q = (0..n).filter(|&v| inset(v)).map(|v| weights[v].clone()).sum();
        if edges.iter().all(|&(a, b)| !(inset(a) && inset(b))) {
            if weight > max_stable {
                max_stable = weight;
            }
        } else if min_unstable.as_ref().map_or(true, |m| weight < *m) {
            min_unstable = Some(weight);
        }
    }
    Ok(match min_unstable {
        None => Some(max_stable),
        Some(m) if max_stable < m => Some(max_stable),
        Some(_) => None,
    })
}

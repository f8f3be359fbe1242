//! Reciprocal-length distances, eccentricities, and hop-count medians.

use crate::error::StructError;
use crate::paths::{strong_edges, StrongVariant};
use ugt_core::{q_zero, Graph, Q};

#[derive(Clone, Debug)]
pub struct MetricReport {
    /// support vertices in declaration order
    pub vertices: Vec<String>,
    /// d_M between support vertices, indexed like `vertices`
    pub distance: Vec<Vec<Q>>,
    pub eccentricity: Vec<Q>,
    pub radius: Q,
    pub diameter: Q,
}

/// Shortest-path distances where each support edge has length Λ(η) = 1/Δ(η).
pub fn metrics(g: &Graph) -> Result<MetricReport, StructError> {
    let verts: Vec<usize> = (0..g.n()).filter(|&i| g.is_support_vertex(i)).collect();
    if verts.is_empty() {
        return Err(StructError::EmptySupport);
    }
    // dense index over support vertices
    let mut pos = vec![usize::MAX; g.n()];
    for (p, &v) in verts.iter().enumerate() {
        pos[v] = p;
    }
    let n = verts.len();
    let mut lengths: Vec<Vec<(usize, Q)>> = vec![Vec::new(); n];
    for (i, j) in g.support().edges {
        let len = g.model().lambda_len(g.eta(i, j).expect("stored"))?;
        lengths[pos[i]].push((pos[j], len.clone()));
        lengths[pos[j]].push((pos[i], len));
    }

    let mut distance: Vec<Vec<Q>> = Vec::with_capacity(n);
    for s in 0..n {
        let mut dist: Vec<Option<Q>> = vec![None; n];
        let mut done = vec![false; n];
        dist[s] = Some(q_zero());
        loop {
            let mut at: Option<usize> = None;
            for v in 0..n {
                if done[v] || dist[v].is_none() {
                    continue;
                }
                if at.map_or(true, |b| dist[v].as_ref() < dist[b].as_ref()) {
                    at = Some(v);
                }
            }
            let Some(v) = at else { break };
            done[v] = true;
            let base = dist[v].clone().expect("reached");
            for (w, len) in &lengths[v] {
                let cand = &base + len;
                if dist[*w].as_ref().map_or(true, |cur| &cand < cur) {
                    dist[*w] = Some(cand);
                }
            }
        }
        let row: Option<Vec<Q>> = dist.into_iter().collect();
        distance.push(row.ok_or(StructError::Disconnected)?);
    }

    let eccentricity: Vec<Q> = distance
        .iter()
        .map(|row| row.iter().max().expect("nonempty").clone())
        .collect();
    let radius = eccentricity.iter().min().expect("nonempty").clone();
    let diameter = eccentricity.iter().max().expect("nonempty").clone();
    Ok(MetricReport {
        vertices: verts.iter().map(|&v| g.id(v).to_string()).collect(),
        distance,
        eccentricity,
        radius,
        diameter,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MedianMode {
    Support,
    Strong,
}

impl MedianMode {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "support" => MedianMode::Support,
            "strong" => MedianMode::Strong,
            _ => return None,
        })
    }
}

/// Hop-count distance matrix on the support vertices; `usize::MAX` marks an
/// unreachable pair.
fn hop_matrix(n_support: usize, adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![usize::MAX; n_support]; n_support];
    for s in 0..n_support {
        let mut q = std::collections::VecDeque::new();
        out[s][s] = 0;
        q.push_back(s);
        while let Some(v) = q.pop_front() {
            for &w in &adj[v] {
                if out[s][w] == usize::MAX {
                    out[s][w] = out[s][v] + 1;
                    q.push_back(w);
                }
            }
        }
    }
    out
}

/// Edges of the graph the medians live on: every support edge, or only the
/// strong ones.
fn median_edges(g: &Graph, mode: MedianMode) -> Vec<(usize, usize)> {
    match mode {
        MedianMode::Support => g.support().edges,
        MedianMode::Strong => strong_edges(g, StrongVariant::GeqWithoutEdge),
    }
}

fn support_positions(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let verts: Vec<usize> = (0..g.n()).filter(|&i| g.is_support_vertex(i)).collect();
    let mut pos = vec![usize::MAX; g.n()];
    for (p, &v) in verts.iter().enumerate() {
        pos[v] = p;
    }
    (verts, pos)
}

/// γ(x,y,z): the triple intersection of hop-count geodesic intervals.
pub fn median(
    g: &Graph,
    x: &str,
    y: &str,
    z: &str,
    mode: MedianMode,
) -> Result<(Vec<String>, bool), StructError> {
    let (verts, pos) = support_positions(g);
    if verts.is_empty() {
        return Err(StructError::EmptySupport);
    }
    let mut triple = [0usize; 3];
    for (slot, id) in [x, y, z].iter().enumerate() {
        let v = g
            .vertex(id)
            .ok_or_else(|| StructError::UnknownVertex(id.to_string()))?;
        if !g.is_support_vertex(v) {
            return Err(StructError::NotSupportVertex(id.to_string()));
        }
        triple[slot] = pos[v];
    }
    if triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2] {
        return Err(StructError::BadWitness("median needs three distinct vertices".into()));
    }
    let n = verts.len();
    let mut adj = vec![Vec::new(); n];
    for (i, j) in median_edges(g, mode) {
        adj[pos[i]].push(pos[j]);
        adj[pos[j]].push(pos[i]);
    }
    let d = hop_matrix(n, &adj);
    if d.iter().any(|row| row.iter().any(|&x| x == usize::MAX)) {
        return Err(StructError::Disconnected);
    }
    let interval = |a: usize, b: usize, w: usize| d[a][w] + d[w][b] == d[a][b];
    let [a, b, c] = triple;
    let set: Vec<String> = (0..n)
        .filter(|&w| interval(a, b, w) && interval(a, c, w) && interval(b, c, w))
        .map(|w| g.id(verts[w]).to_string())
        .collect();
    let singleton = set.len() == 1;
    Ok((set, singleton))
}

/// True when every distinct support triple has a one-vertex median
/// (support-mode geodesics).
pub fn is_median_graph(g: &Graph) -> Result<bool, StructError> {
    let (verts, pos) = support_positions(g);
    let n = verts.len();
    if n > 20 {
        return Err(StructError::Undecided {
            op: "is_median_graph",
            cap: 20,
            actual: n,
        });
    }
    if n == 0 {
        return Err(StructError::Disconnected);
    }
    let mut adj = vec![Vec::new(); n];
    for (i, j) in g.support().edges {
        adj[pos[i]].push(pos[j]);
        adj[pos[j]].push(pos[i]);
    }
    let d = hop_matrix(n, &adj);
    if d.iter().any(|row| row.iter().any(|&x| x == usize::MAX)) {
        return Err(StructError::Disconnected);
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let count = (0..n)
                    .filter(|&w| {
                        d[a][w] + d[w][b] == d[a][b]
                            && d[a][w] + d[w][c] == d[a][c]
                            && d[b][w] + d[w][c] == d[b][c]
                    })
                    .count();
                if count != 1 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

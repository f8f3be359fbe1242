//! Capacity-constrained matchings and support-edge vertex covers.

use crate::error::ParamError;
use crate::result::{ParamResult, Witness};
use ugt_core::{q_zero, Graph, Q};

/// Maximum Σδ(η(M)) over edge subsets where each vertex carries at most
/// ω(σ) of incident δ-weight. The empty set is always feasible.
pub fn matching_number(g: &Graph) -> Result<ParamResult, ParamError> {
    let m = g.model();
    let mut edges: Vec<(usize, usize, Q)> = g
        .support()
        .edges
        .into_iter()
        .map(|(u, v)| (u, v, m.delta_edge(g.eta(u, v).expect("stored"))))
        .collect();
    edges.sort_by_key(|&(u, v, _)| (u, v));
    if edges.len() > 20 {
        return Err(ParamError::Undecided {
            op: "matching_number",
            cap: 20,
            actual: edges.len(),
        });
    }
    let capacity: Vec<Q> = (0..g.n()).map(|v| m.omega(g.sigma(v))).collect();
    let mut suffix = vec![q_zero(); edges.len() + 1];
    for e in (0..edges.len()).rev() {
        suffix[e] = &suffix[e + 1] + &edges[e].2;
    }

    struct Search<'a> {
        edges: &'a [(usize, usize, Q)],
        capacity: &'a [Q],
        suffix: &'a [Q],
        used: Vec<Q>,
        best: Q,
        best_mask: u32,
    }
    impl Search<'_> {
        fn go(&mut self, e: usize, mask: u32, acc: Q) {
            if acc > self.best {
                self.best = acc.clone();
                self.best_mask = mask;
            }
            if e == self.edges.len() || &acc + &self.suffix[e] <= self.best {
                return;
            }
            let (u, v, ref w) = self.edges[e];
            if &self.used[u] + w <= self.capacity[u] && &self.used[v] + w <= self.capacity[v] {
                self.used[u] += w;
                self.used[v] += w;
                self.go(e + 1, mask | 1 << e, &acc + w);
                self.used[u] -= w;
                self.used[v] -= w;
            }
            self.go(e + 1, mask, acc);
        }
    }
    let mut s = Search {
        edges: &edges,
        capacity: &capacity,
        suffix: &suffix,
        used: vec![q_zero(); g.n()],
        best: q_zero(),
        best_mask: 0,
    };
    s.go(0, 0, q_zero());
    let chosen: Vec<(String, String)> = (0..edges.len())
        .filter(|&e| s.best_mask >> e & 1 == 1)
        .map(|e| (g.id(edges[e].0).to_string(), g.id(edges[e].1).to_string()))
        .collect();
    Ok(ParamResult::exact(s.best, Witness::EdgeSet(chosen)))
}

/// Minimum Σω(σ(C)) over support-vertex sets touching every support edge.
pub fn vertex_cover_number(g: &Graph) -> Result<ParamResult, ParamError> {
    let support = g.support();
    let verts = support.vertices;
    let n = verts.len();
    if n > 20 {
        return Err(ParamError::Undecided {
            op: "vertex_cover_number",
            cap: 20,
            actual: n,
        });
    }
    let mut pos = vec![usize::MAX; g.n()];
    for (p, &v) in verts.iter().enumerate() {
        pos[v] = p;
    }
    let edge_masks: Vec<u32> = {
        let mut ms: Vec<u32> = support
            .edges
            .iter()
            .map(|&(u, v)| 1 << pos[u] | 1 << pos[v])
            .collect();
        ms.sort_unstable();
        ms
    };
    let weights: Vec<Q> = verts.iter().map(|&v| g.model().omega(g.sigma(v))).collect();

    let full: u64 = (1u64 << n) - 1;
    let mut best: Option<(Q, u64)> = None;
    'mask: for s in 0..=full {
        for &em in &edge_masks {
            if s & em as u64 == 0 {
                continue 'mask;
            }
        }
        // weight with early abort once the incumbent is beaten
        let mut w = q_zero();
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            w += &weights[v];
            if let Some((bw, _)) = &best {
                if w >= *bw {
                    continue 'mask;
                }
            }
            bits &= bits - 1;
        }
        best = Some((w, s));
    }
    let (value, mask) = best.expect("the full support set always covers");
    let members: Vec<String> = (0..n)
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| g.id(verts[i]).to_string())
        .collect();
    Ok(ParamResult::exact(value, Witness::VertexSet(members)))
}

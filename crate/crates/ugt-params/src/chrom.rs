//! Chromatic number as the max proper-coloring demand over level cuts.

use crate::error::ParamError;
use crate::result::{LevelColoring, ParamResult, Witness};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use ugt_core::{q_int, Degree, Graph};

/// Exact chromatic number of a crisp graph given as adjacency bitmasks,
/// together with one proper coloring (colors from 1). Backtracking with a
/// saturation-first vertex order and a clique seed for the lower bound.
fn color_graph(adj: &[u64]) -> (usize, Vec<usize>) {
    let n = adj.len();
    if n == 0 {
        return (0, Vec::new());
    }
    let clique = max_clique(adj);
    let lb = clique.len().max(1);
    for k in lb..=n {
        let mut colors = vec![0usize; n];
        // seed the clique to break color symmetry
        for (c, &v) in clique.iter().enumerate() {
            colors[v] = c + 1;
        }
        if try_color(adj, k, &mut colors) {
            return (k, colors);
        }
    }
    unreachable!("n colors always suffice");
}

fn try_color(adj: &[u64], k: usize, colors: &mut [usize]) -> bool {
    let n = adj.len();
    if colors.iter().filter(|&&c| c != 0).count() == n {
        return true;
    }
    // most saturated uncolored vertex, then highest degree, then least index
    let mut pick = usize::MAX;
    let mut pick_key = (0usize, 0usize);
    for v in 0..n {
        if colors[v] != 0 {
            continue;
        }
        let mut seen = 0u64;
        let mut nb = adj[v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            if colors[u] != 0 {
                seen |= 1 << (colors[u] - 1);
            }
            nb &= nb - 1;
        }
        let key = (seen.count_ones() as usize, adj[v].count_ones() as usize);
        if pick == usize::MAX || key > pick_key {
            pick = v;
            pick_key = key;
        }
    }
    let mut used = 0u64;
    let mut nb = adj[pick];
    while nb != 0 {
        let u = nb.trailing_zeros() as usize;
        if colors[u] != 0 {
            used |= 1 << (colors[u] - 1);
        }
        nb &= nb - 1;
    }
    // allow at most one color beyond the highest used so far
    let cap = colors.iter().copied().max().unwrap_or(0).min(k - 1) + 1;
    for c in 1..=cap {
        if used >> (c - 1) & 1 == 1 {
            continue;
        }
        colors[pick] = c;
        if try_color(adj, k, colors) {
            return true;
        }
        colors[pick] = 0;
    }
    false
}

fn max_clique(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut best: Vec<usize> = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn grow(adj: &[u64], cand: u64, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
        if cur.len() + cand.count_ones() as usize <= best.len() {
            return;
        }
        if cand == 0 {
            if cur.len() > best.len() {
                *best = cur.clone();
            }
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cur.push(v);
        grow(adj, cand & adj[v], cur, best);
        cur.pop();
        grow(adj, cand & !(1 << v), cur, best);
    }
    let all: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    grow(adj, all, &mut cur, &mut best);
    best
}

/// χ over all realized levels λ (nonzero σ values and support-edge η
/// values): vertices with λ ⪯ σ, stored edges inside with λ ⪯ η. The value
/// is the worst cut; witnesses are colorings of every attaining cut.
pub fn chromatic_number(g: &Graph) -> Result<ParamResult, ParamError> {
    let m = g.model();
    let mut levels: Vec<Degree> = Vec::new();
    let mut push = |d: &Degree| {
        if !d.is_zero() && !levels.contains(d) {
            levels.push(d.clone());
        }
    };
    for v in 0..g.n() {
        push(g.sigma(v));
    }
    for (u, v) in g.support().edges {
        push(g.eta(u, v).expect("stored"));
    }
    levels.sort_by(|a, b| m.compare(a, b));

    let mut best = 0usize;
    let mut attained: Vec<LevelColoring> = Vec::new();
    for lam in &levels {
        let verts: Vec<usize> = (0..g.n())
            .filter(|&v| m.compare(lam, g.sigma(v)) != Ordering::Greater)
            .collect();
        if verts.len() > 15 {
            return Err(ParamError::Undecided {
                op: "chromatic_number",
                cap: 15,
                actual: verts.len(),
            });
        }
        let mut pos = vec![usize::MAX; g.n()];
        for (p, &v) in verts.iter().enumerate() {
            pos[v] = p;
        }
        let mut adj = vec![0u64; verts.len()];
        for (u, v, eta) in g.edges() {
            if pos[u] != usize::MAX && pos[v] != usize::MAX
                && m.compare(lam, eta) != Ordering::Greater
            {
                adj[pos[u]] |= 1 << pos[v];
                adj[pos[v]] |= 1 << pos[u];
            }
        }
        let (chi, colors) = color_graph(&adj);
        match chi.cmp(&best) {
            Ordering::Greater => {
                best = chi;
                attained.clear();
            }
            Ordering::Less => continue,
            Ordering::Equal => {}
        }
        if chi == best && chi > 0 {
            let coloring: BTreeMap<String, usize> = verts
                .iter()
                .enumerate()
                .map(|(p, &v)| (g.id(v).to_string(), colors[p]))
                .collect();
            attained.push(LevelColoring {
                level: lam.clone(),
                colors_used: chi,
                coloring,
            });
        }
    }
    Ok(ParamResult::exact(
        q_int(best as i64),
        Witness::Colorings(attained),
    ))
}

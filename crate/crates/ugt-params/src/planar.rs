//! Planarity value: exactly 1 on planar supports, otherwise an interval
//! from a concrete convex drawing (lower) and the cheapest possible
//! crossing (upper).

use crate::error::ParamError;
use crate::result::{ParamResult, Witness};
use num_traits::Zero;
use ugt_core::{q_int, q_one, Graph, Q};

/// Face-by-face embedding test (Demoucron-style) on each biconnected piece.
fn is_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    if n <= 4 {
        return true;
    }
    if edges.len() > 3 * n - 6 {
        return false;
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for a in adj.iter_mut() {
        a.sort_unstable();
    }
    biconnected_components(n, &adj)
        .into_iter()
        .all(|comp| component_planar(&comp))
}

fn biconnected_components(n: usize, adj: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut estack: Vec<(usize, usize)> = Vec::new();
    let mut comps: Vec<Vec<(usize, usize)>> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(&(v, parent, idx)) = stack.last() {
            if idx < adj[v].len() {
                stack.last_mut().expect("nonempty").2 += 1;
                let w = adj[v][idx];
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    estack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    estack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut comp = Vec::new();
                        while let Some(e) = estack.pop() {
                            comp.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        comps.push(comp);
                    }
                }
            }
        }
    }
    comps
}

fn component_planar(edges: &[(usize, usize)]) -> bool {
    if edges.len() <= 2 {
        return true;
    }
    // local reindex
    let mut ids: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    ids.sort_unstable();
    ids.dedup();
    let nv = ids.len();
    let local = |x: usize| ids.binary_search(&x).unwrap();
    if nv >= 3 && edges.len() > 3 * nv - 6 {
        return false;
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nv];
    let eds: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (local(u), local(v))).collect();
    for &(u, v) in &eds {
        adj[u].push(v);
        adj[v].push(u);
    }
    for a in adj.iter_mut() {
        a.sort_unstable();
    }

    // every vertex has degree ≥ 2 here, so a greedy walk closes a cycle
    let mut walk = vec![0usize];
    let (mut prev, mut cur) = (usize::MAX, 0usize);
    let cycle: Vec<usize> = loop {
        let next = *adj[cur].iter().find(|&&x| x != prev).expect("degree ≥ 2");
        if let Some(p) = walk.iter().position(|&x| x == next) {
            break walk[p..].to_vec();
        }
        walk.push(next);
        prev = cur;
        cur = next;
    };

    let norm = |u: usize, v: usize| (u.min(v), u.max(v));
    let mut in_h = vec![false; nv];
    let mut embedded = std::collections::HashSet::new();
    for i in 0..cycle.len() {
        in_h[cycle[i]] = true;
        embedded.insert(norm(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    while embedded.len() < eds.len() {
        // fragments: unembedded chords between H-vertices, and connected
        // pieces of G − H with their attachment sets
        let mut fragments: Vec<(Vec<usize>, Vec<usize>)> = Vec::new(); // (attach, comp)
        for &(u, v) in &eds {
            if in_h[u] && in_h[v] && !embedded.contains(&norm(u, v)) {
                fragments.push((vec![u.min(v), u.max(v)], Vec::new()));
            }
        }
        let mut seen: Vec<bool> = in_h.clone();
        for s in 0..nv {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            let mut attach = Vec::new();
            seen[s] = true;
            let mut queue = vec![s];
            while let Some(x) = queue.pop() {
                for &y in &adj[x] {
                    if in_h[y] {
                        attach.push(y);
                    } else if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push(y);
                    }
                }
            }
            attach.sort_unstable();
            attach.dedup();
            comp.sort_unstable();
            fragments.push((attach, comp));
        }

        let admissible: Vec<Vec<usize>> = fragments
            .iter()
            .map(|(attach, _)| {
                faces
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| attach.iter().all(|a| f.contains(a)))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        if admissible.iter().any(|a| a.is_empty()) {
            return false;
        }
        let pick = admissible
            .iter()
            .position(|a| a.len() == 1)
            .unwrap_or(0);
        let face_idx = admissible[pick][0];
        let (attach, comp) = &fragments[pick];

        // α-path between two attachment vertices through the fragment
        let path: Vec<usize> = if comp.is_empty() {
            vec![attach[0], attach[1]]
        } else {
            let (a, b) = (attach[0], attach[1]);
            let mut from = vec![usize::MAX; nv];
            let mut queue = std::collections::VecDeque::from([a]);
            'bfs: while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    // the path must pass through the fragment: a direct a–b
                    // edge would be its own chord fragment
                    if y == b && x != a {
                        from[b] = x;
                        break 'bfs;
                    }
                    if comp.binary_search(&y).is_ok() && from[y] == usize::MAX && y != a {
                        from[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            let mut p = vec![b];
            while *p.last().unwrap() != a {
                p.push(from[*p.last().unwrap()]);
            }
            p.reverse();
            p
        };

        for w in &path[1..path.len() - 1] {
            in_h[*w] = true;
        }
        for pair in path.windows(2) {
            embedded.insert(norm(pair[0], pair[1]));
        }
        let face = faces[face_idx].clone();
        let (f1, f2) = split_face(&face, &path);
        faces[face_idx] = f1;
        faces.push(f2);
    }
    true
}

fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let i = face.iter().position(|&x| x == path[0]).expect("attachment on face");
    let j = face
        .iter()
        .position(|&x| x == *path.last().unwrap())
        .expect("attachment on face");
    let len = face.len();
    let mut seq1 = Vec::new();
    let mut k = i;
    loop {
        seq1.push(face[k]);
        if k == j {
            break;
        }
        k = (k + 1) % len;
    }
    let mut seq2 = Vec::new();
    let mut k = j;
    loop {
        seq2.push(face[k]);
        if k == i {
            break;
        }
        k = (k + 1) % len;
    }
    let interior = &path[1..path.len() - 1];
    seq1.extend(interior.iter().rev().copied());
    seq2.extend(interior.iter().copied());
    (seq1, seq2)
}

/// 1 for planar supports; otherwise bounds [L, U] where L realizes the
/// convex straight-line drawing and U caps any drawing by its cheapest
/// possible crossing.
pub fn planarity_value(g: &Graph) -> Result<ParamResult, ParamError> {
    let m = g.model();
    let support = g.support();
    let verts = support.vertices;
    let mut pos = vec![usize::MAX; g.n()];
    for (p, &v) in verts.iter().enumerate() {
        pos[v] = p;
    }
    let edges: Vec<(usize, usize)> = {
        let mut es: Vec<(usize, usize)> = support
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (pos[u], pos[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        es.sort_unstable();
        es
    };
    if is_planar(verts.len(), &edges) {
        return Ok(ParamResult::exact(q_one(), Witness::None));
    }

    // edge strength s(e) = Δ(η) / Δ(Γ(σu, σv))
    let mut strength: Vec<Q> = Vec::with_capacity(edges.len());
    for &(a, b) in &edges {
        let (u, v) = (verts[a], verts[b]);
        let denom = m.delta(&m.gamma(g.sigma(u), g.sigma(v)));
        if denom.is_zero() {
            return Err(ParamError::Degenerate(format!(
                "complete-edge degree of {{{}, {}}} has zero score",
                g.id(u),
                g.id(v)
            )));
        }
        strength.push(m.delta(g.eta(u, v).expect("stored")) / denom);
    }
    let crossing = |e: usize, f: usize| -> Q { (&strength[e] + &strength[f]) / q_int(2) };

    let mut min_crossing: Option<Q> = None;
    let mut convex_total = Q::zero();
    for e in 0..edges.len() {
        for f in e + 1..edges.len() {
            let c = crossing(e, f);
            if min_crossing.as_ref().map_or(true, |mc| c < *mc) {
                min_crossing = Some(c.clone());
            }
            // chords of a circle cross exactly when their endpoints interleave
            let (a, b) = edges[e];
            let (c2, d) = edges[f];
            if (a < c2 && c2 < b && b < d) || (c2 < a && a < d && d < b) {
                convex_total += c;
            }
        }
    }
    let lower = q_one() / (q_one() + convex_total);
    let upper = q_one() / (q_one() + min_crossing.expect("a nonplanar graph has ≥ 2 edges"));
    Ok(ParamResult {
        value: lower.clone(),
        witness: Witness::None,
        bounds: Some((lower, upper)),
    })
}

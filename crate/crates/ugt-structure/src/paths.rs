//! Path enumeration, strength of connectedness, strong edges, and the
//! cycle/tree predicates.
//!
//! Strengths are not monotone under the (order-max, componentwise-min)
//! pair for k > 1, so CONN is computed by exhaustive simple-path
//! enumeration rather than by a dynamic program.

use crate::error::StructError;
use std::cmp::Ordering;
use ugt_core::{Degree, Graph};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StrongVariant {
    /// η(e) ⪰ CONN of the endpoints with e removed.
    GeqWithoutEdge,
    /// η(e) equals the strength of connectedness (domination chapters).
    EqConn,
    /// η(e) ⪰ the strength of connectedness (independence chapters).
    GeqConn,
}

impl StrongVariant {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "geq_without_edge" => StrongVariant::GeqWithoutEdge,
            "eq_conn" => StrongVariant::EqConn,
            "geq_conn" => StrongVariant::GeqConn,
            _ => return None,
        })
    }
}

/// Visits every simple path between two support vertices; the callback
/// gets the vertex sequence and the path strength.
fn walk_paths<F: FnMut(&[usize], &Degree)>(
    g: &Graph,
    adj: &[Vec<usize>],
    from: usize,
    to: usize,
    skip: Option<(usize, usize)>,
    f: &mut F,
) {
    let skip = skip.map(|(a, b)| (a.min(b), a.max(b)));
    let mut visited = vec![false; g.n()];
    let mut stack: Vec<usize> = vec![from];
    visited[from] = true;
    // degrees along the current path, one per edge
    let mut degs: Vec<Degree> = Vec::new();

    fn rec<F: FnMut(&[usize], &Degree)>(
        g: &Graph,
        adj: &[Vec<usize>],
        to: usize,
        skip: Option<(usize, usize)>,
        visited: &mut Vec<bool>,
        stack: &mut Vec<usize>,
        degs: &mut Vec<Degree>,
        f: &mut F,
    ) {
        let at = *stack.last().unwrap();
        if at == to {
            if !degs.is_empty() {
                let s = g.model().path_strength(degs).expect("nonempty");
                f(stack, &s);
            }
            return;
        }
        for &next in &adj[at] {
            if visited[next] {
                continue;
            }
            let key = (at.min(next), at.max(next));
            if skip == Some(key) {
                continue;
            }
            visited[next] = true;
            stack.push(next);
            degs.push(g.eta(at, next).expect("support edge").clone());
            rec(g, adj, to, skip, visited, stack, degs, f);
            degs.pop();
            stack.pop();
            visited[next] = false;
        }
    }
    rec(g, adj, to, skip, &mut visited, &mut stack, &mut degs, f);
}

/// CONN plus one strongest path, or `None` when the endpoints are
/// disconnected (with the optional edge removed).
pub fn conn_strength_opt(
    g: &Graph,
    u: usize,
    v: usize,
    delete_edge: Option<(usize, usize)>,
) -> Option<(Degree, Vec<usize>)> {
    let adj = g.support_adj();
    let mut best: Option<(Degree, Vec<usize>)> = None;
    walk_paths(g, &adj, u, v, delete_edge, &mut |path, s| {
        let better = match &best {
            None => true,
            Some((b, _)) => g.model().compare(s, b) == Ordering::Greater,
        };
        if better {
            best = Some((s.clone(), path.to_vec()));
        }
    });
    best
}

/// Public CONN: errors distinguish "no path" from a 0_M-strength result.
pub fn conn_strength(
    g: &Graph,
    u: &str,
    v: &str,
    delete_edge: Option<(&str, &str)>,
) -> Result<(Degree, Vec<String>), StructError> {
    let iu = g.vertex(u).ok_or_else(|| StructError::UnknownVertex(u.into()))?;
    let iv = g.vertex(v).ok_or_else(|| StructError::UnknownVertex(v.into()))?;
    if iu == iv {
        return Err(StructError::BadWitness("endpoints must be distinct".into()));
    }
    for (idx, name) in [(iu, u), (iv, v)] {
        if !g.is_support_vertex(idx) {
            return Err(StructError::NotSupportVertex(name.into()));
        }
    }
    let skip = match delete_edge {
        Some((a, b)) => {
            let ia = g.vertex(a).ok_or_else(|| StructError::UnknownVertex(a.into()))?;
            let ib = g.vertex(b).ok_or_else(|| StructError::UnknownVertex(b.into()))?;
            Some((ia, ib))
        }
        None => None,
    };
    match conn_strength_opt(g, iu, iv, skip) {
        Some((s, path)) => Ok((s, path.into_iter().map(|i| g.id(i).to_string()).collect())),
        None => Err(StructError::NoPath(u.into(), v.into())),
    }
}

/// Support edges that are strong under the chosen book variant.
pub fn strong_edges(g: &Graph, variant: StrongVariant) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, j) in g.support().edges {
        let d = g.eta(i, j).expect("stored");
        let strong = match variant {
            StrongVariant::GeqWithoutEdge => match conn_strength_opt(g, i, j, Some((i, j))) {
                // a bridge has no rival connection and is always strong
                None => true,
                Some((alt, _)) => g.model().compare(d, &alt) != Ordering::Less,
            },
            StrongVariant::EqConn | StrongVariant::GeqConn => {
                let (conn, _) = conn_strength_opt(g, i, j, None).expect("direct edge is a path");
                match variant {
                    StrongVariant::EqConn => *d == conn,
                    _ => g.model().compare(d, &conn) != Ordering::Less,
                }
            }
        };
        if strong {
            out.push((i, j));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWitness {
    /// canonical vertex order: smallest id first, lex-smaller direction
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    /// edges attaining the ⪯_M-least degree on the cycle
    pub weakest: Vec<(String, String)>,
}

/// Normalizes a closed or open traversal to index form and checks every
/// consecutive pair is a support edge.
fn cycle_indices(g: &Graph, seq: &[String]) -> Result<Vec<usize>, StructError> {
    let mut idx = Vec::with_capacity(seq.len());
    for id in seq {
        idx.push(
            g.vertex(id)
                .ok_or_else(|| StructError::UnknownVertex(id.clone()))?,
        );
    }
    if idx.len() >= 2 && idx.first() == idx.last() {
        idx.pop();
    }
    if idx.len() < 3 {
        return Err(StructError::NotACycle("needs at least three vertices".into()));
    }
    let mut seen = std::collections::BTreeSet::new();
    for &i in &idx {
        if !seen.insert(i) {
            return Err(StructError::NotACycle("repeated interior vertex".into()));
        }
        if !g.is_support_vertex(i) {
            return Err(StructError::NotACycle(format!(
                "{} is not a support vertex",
                g.id(i)
            )));
        }
    }
    for w in 0..idx.len() {
        let (a, b) = (idx[w], idx[(w + 1) % idx.len()]);
        if g.eta(a, b).is_none() || !g.is_support_vertex(a) || !g.is_support_vertex(b) {
            return Err(StructError::NotACycle(format!(
                "{{{},{}}} is not a support edge",
                g.id(a),
                g.id(b)
            )));
        }
    }
    Ok(idx)
}

/// An uncertain cycle must attain its weakest edge degree at least twice.
/// The witness is invariant under rotation and reversal of the input.
pub fn is_uncertain_cycle(g: &Graph, seq: &[String]) -> Result<(bool, CycleWitness), StructError> {
    let idx = cycle_indices(g, seq)?;
    let m = g.model();
    let mut edges: Vec<(usize, usize)> = (0..idx.len())
        .map(|w| {
            let (a, b) = (idx[w], idx[(w + 1) % idx.len()]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    let weakest_degree = edges
        .iter()
        .map(|&(a, b)| g.eta(a, b).expect("checked"))
        .fold(None::<&Degree>, |acc, d| match acc {
            None => Some(d),
            Some(cur) => Some(m.deg_min(cur, d)),
        })
        .expect("cycle has edges")
        .clone();
    let weakest: Vec<(usize, usize)> = edges
        .iter()
        .filter(|&&(a, b)| *g.eta(a, b).expect("checked") == weakest_degree)
        .copied()
        .collect();

    // canonical orientation: start at the smallest index, walk toward the
    // smaller of its two cycle neighbors
    let start_pos = (0..idx.len()).min_by_key(|&p| idx[p]).unwrap();
    let n = idx.len();
    let next = idx[(start_pos + 1) % n];
    let prev = idx[(start_pos + n - 1) % n];
    let forward = next <= prev;
    let mut canon = Vec::with_capacity(n);
    for step in 0..n {
        let p = if forward {
            (start_pos + step) % n
        } else {
            (start_pos + n - step % n) % n
        };
        canon.push(idx[p]);
    }

    let name_pair = |&(a, b): &(usize, usize)| (g.id(a).to_string(), g.id(b).to_string());
    let witness = CycleWitness {
        vertices: canon.into_iter().map(|i| g.id(i).to_string()).collect(),
        edges: edges.iter().map(name_pair).collect(),
        weakest: weakest.iter().map(name_pair).collect(),
    };
    Ok((weakest.len() >= 2, witness))
}

/// Uncertain-tree test (support graph over *all* declared vertices).
/// With a witness subgraph the three conditions are checked directly;
/// without, every spanning subset of the nonzero edges is tried.
pub fn is_uncertain_tree(
    g: &Graph,
    witness_edges: Option<&[(String, String)]>,
) -> Result<(bool, Option<Vec<(String, String)>>), StructError> {
    let n = g.n();
    let all_edges: Vec<(usize, usize)> = g.edges().map(|(i, j, _)| (i, j)).collect();

    if !spans_connected_on(n, &all_edges) {
        return Ok((false, None));
    }
    match witness_edges {
        Some(pairs) => {
            let mut f = Vec::with_capacity(pairs.len());
            for (u, v) in pairs {
                let iu = g
                    .vertex(u)
                    .ok_or_else(|| StructError::UnknownVertex(u.clone()))?;
                let iv = g
                    .vertex(v)
                    .ok_or_else(|| StructError::UnknownVertex(v.clone()))?;
                let key = (iu.min(iv), iu.max(iv));
                if g.eta(key.0, key.1).is_none() {
                    return Err(StructError::BadWitness(format!(
                        "{{{u},{v}}} is not a nonzero edge"
                    )));
                }
                f.push(key);
            }
            f.sort_unstable();
            f.dedup();
            let ok = tree_conditions(g, n, &all_edges, &f);
            Ok((ok, ok.then(|| name_edges(g, &f))))
        }
        None => {
            if all_edges.len() > 16 {
                return Err(StructError::Undecided {
                    op: "is_uncertain_tree",
                    cap: 16,
                    actual: all_edges.len(),
                });
            }
            if n == 0 {
                return Ok((false, None));
            }
            let want = n - 1;
            // lexicographic subset enumeration keeps the reported witness
            // canonical
            let m = all_edges.len();
            let mut chosen: Vec<usize> = Vec::new();
            fn search(
                g: &Graph,
                all: &[(usize, usize)],
                n: usize,
                want: usize,
                start: usize,
                chosen: &mut Vec<usize>,
            ) -> Option<Vec<(usize, usize)>> {
                if chosen.len() == want {
                    let f: Vec<(usize, usize)> = chosen.iter().map(|&i| all[i]).collect();
                    if tree_conditions(g, n, all, &f) {
                        return Some(f);
                    }
                    return None;
                }
                if start >= all.len() || all.len() - start < want - chosen.len() {
                    return None;
                }
                for i in start..all.len() {
                    chosen.push(i);
                    if let Some(f) = search(g, all, n, want, i + 1, chosen) {
                        return Some(f);
                    }
                    chosen.pop();
                }
                None
            }
            let _ = m;
            match search(g, &all_edges, n, want, 0, &mut chosen) {
                Some(f) => Ok((true, Some(name_edges(g, &f)))),
                None => Ok((false, None)),
            }
        }
    }
}

fn name_edges(g: &Graph, f: &[(usize, usize)]) -> Vec<(String, String)> {
    f.iter()
        .map(|&(a, b)| (g.id(a).to_string(), g.id(b).to_string()))
        .collect()
}

pub(crate) fn spans_connected_on(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

fn tree_conditions(g: &Graph, n: usize, all_edges: &[(usize, usize)], f: &[(usize, usize)]) -> bool {
    if f.len() + 1 != n || !spans_connected_on(n, f) {
        return false;
    }
    // adjacency inside F for unique-path walks
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in f {
        adj[a].push(b);
        adj[b].push(a);
    }
    let fset: std::collections::BTreeSet<(usize, usize)> = f.iter().copied().collect();
    for &(a, b) in all_edges {
        if fset.contains(&(a, b)) {
            continue;
        }
        let Some(strength) = tree_path_strength(g, &adj, a, b) else {
            return false;
        };
        if g.model().compare(g.eta(a, b).expect("stored"), &strength) != Ordering::Less {
            return false;
        }
    }
    true
}

/// Strength of the unique a–b path in a tree given by adjacency lists.
fn tree_path_strength(g: &Graph, adj: &[Vec<usize>], a: usize, b: usize) -> Option<Degree> {
    let mut parent = vec![usize::MAX; adj.len()];
    let mut stack = vec![a];
    parent[a] = a;
    while let Some(v) = stack.pop() {
        if v == b {
            break;
        }
        for &w in &adj[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    if parent[b] == usize::MAX {
        return None;
    }
    let mut degs = Vec::new();
    let mut at = b;
    while at != a {
        let p = parent[at];
        degs.push(g.eta(p, at).expect("tree edge").clone());
        at = p;
    }
    g.model().path_strength(&degs).ok()
}

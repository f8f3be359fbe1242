//! Support-graph shape recognition: completeness, stars, wheels,
//! bipartitions, regularity, Euler and Hamilton properties.

use crate::error::StructError;
use ugt_core::{q_zero, Graph, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HamiltonianStatus {
    Yes(Vec<String>),
    No,
    /// support too large for the exhaustive search (cap 12)
    Undecided,
}

#[derive(Clone, Debug)]
pub struct ShapeReport {
    pub connected: bool,
    /// crisp completeness of the support graph
    pub complete: bool,
    /// (center, leaves) when the support graph is a star
    pub star: Option<(String, Vec<String>)>,
    /// (hub, rim in cycle order) when the support graph is a wheel
    pub wheel: Option<(String, Vec<String>)>,
    pub bipartite: Option<(Vec<String>, Vec<String>)>,
    /// constant weighted degree Σ Δ(η) when it exists (over all vertices)
    pub regular: Option<Q>,
    pub eulerian: bool,
    pub hamiltonian: HamiltonianStatus,
}

fn support_view(g: &Graph) -> (Vec<usize>, Vec<usize>, Vec<Vec<bool>>, Vec<Vec<usize>>) {
    let verts: Vec<usize> = (0..g.n()).filter(|&i| g.is_support_vertex(i)).collect();
    let mut pos = vec![usize::MAX; g.n()];
    for (p, &v) in verts.iter().enumerate() {
        pos[v] = p;
    }
    let n = verts.len();
    let mut adjm = vec![vec![false; n]; n];
    let mut adj = vec![Vec::new(); n];
    for (i, j) in g.support().edges {
        let (a, b) = (pos[i], pos[j]);
        adjm[a][b] = true;
        adjm[b][a] = true;
        adj[a].push(b);
        adj[b].push(a);
    }
    (verts, pos, adjm, adj)
}

fn connected(n: usize, adj: &[Vec<usize>]) -> bool {
    if n == 0 {
        return false;
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

/// Star test: one center adjacent to everything else, leaves of degree one.
fn find_star(n: usize, adj: &[Vec<usize>]) -> Option<(usize, Vec<usize>)> {
    if n < 2 {
        return None;
    }
    let center = (0..n).find(|&c| adj[c].len() == n - 1)?;
    for v in 0..n {
        if v != center && adj[v].len() != 1 {
            return None;
        }
    }
    Some((center, (0..n).filter(|&v| v != center).collect()))
}

/// Wheel test: a hub adjacent to all others whose removal leaves one cycle.
fn find_wheel(n: usize, adjm: &[Vec<bool>], adj: &[Vec<usize>]) -> Option<(usize, Vec<usize>)> {
    if n < 4 {
        return None;
    }
    'hubs: for hub in 0..n {
        if adj[hub].len() != n - 1 {
            continue;
        }
        // the rim must be 2-regular (besides the hub edge) and a single cycle
        let rim: Vec<usize> = (0..n).filter(|&v| v != hub).collect();
        for &v in &rim {
            if adj[v].len() != 3 {
                continue 'hubs;
            }
        }
        let start = rim[0];
        let mut order = vec![start];
        let first_next = rim
            .iter()
            .copied()
            .filter(|&w| w != start && adjm[start][w])
            .min()?;
        let mut prev = start;
        let mut at = first_next;
        while at != start {
            order.push(at);
            let next = rim
                .iter()
                .copied()
                .find(|&w| w != prev && w != at && adjm[at][w]);
            match next {
                Some(w) => {
                    prev = at;
                    at = w;
                }
                None => continue 'hubs,
            }
        }
        if order.len() == n - 1 {
            return Some((hub, order));
        }
    }
    None
}

fn find_bipartition(n: usize, adj: &[Vec<usize>]) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut color = vec![2u8; n];
    for s in 0..n {
        if color[s] != 2 {
            continue;
        }
        color[s] = 0;
        let mut q = std::collections::VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &w in &adj[v] {
                if color[w] == 2 {
                    color[w] = 1 - color[v];
                    q.push_back(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
    }
    Some((
        (0..n).filter(|&v| color[v] == 0).collect(),
        (0..n).filter(|&v| color[v] == 1).collect(),
    ))
}

enum HamCycle {
    Yes(Vec<usize>),
    No,
    Undecided,
}

fn hamiltonian_cycle(n: usize, adjm: &[Vec<bool>], adj: &[Vec<usize>]) -> HamCycle {
    if n > 12 {
        return HamCycle::Undecided;
    }
    if n < 3 {
        return HamCycle::No;
    }
    fn dfs(
        at: usize,
        used: &mut Vec<bool>,
        path: &mut Vec<usize>,
        n: usize,
        adjm: &[Vec<bool>],
        adj: &[Vec<usize>],
    ) -> bool {
        if path.len() == n {
            return adjm[at][0];
        }
        for &w in &adj[at] {
            if !used[w] {
                used[w] = true;
                path.push(w);
                if dfs(w, used, path, n, adjm, adj) {
                    return true;
                }
                path.pop();
                used[w] = false;
            }
        }
        false
    }
    let mut used = vec![false; n];
    used[0] = true;
    let mut path = vec![0usize];
    if dfs(0, &mut used, &mut path, n, adjm, adj) {
        HamCycle::Yes(path)
    } else {
        HamCycle::No
    }
}

pub fn shape(g: &Graph) -> ShapeReport {
    let (verts, _pos, adjm, adj) = support_view(g);
    let n = verts.len();
    let name = |v: usize| g.id(verts[v]).to_string();
    let names = |vs: &[usize]| vs.iter().map(|&v| name(v)).collect::<Vec<_>>();

    let is_connected = connected(n, &adj);
    let complete = (0..n).all(|a| (a + 1..n).all(|b| adjm[a][b]));

    // weighted degrees over every declared vertex, not just the support
    let mut wdeg: Vec<Q> = vec![q_zero(); g.n()];
    for (i, j, d) in g.edges() {
        let v = g.model().delta(d);
        wdeg[i] += v.clone();
        wdeg[j] += v;
    }
    let regular = if g.n() > 0 && wdeg.iter().all(|d| *d == wdeg[0]) {
        Some(wdeg[0].clone())
    } else {
        None
    };

    let eulerian = is_connected && (0..n).all(|v| adj[v].len() % 2 == 0);

    let hamiltonian = match hamiltonian_cycle(n, &adjm, &adj) {
        HamCycle::Yes(path) => HamiltonianStatus::Yes(names(&path)),
        HamCycle::No => HamiltonianStatus::No,
        HamCycle::Undecided => HamiltonianStatus::Undecided,
    };

    ShapeReport {
        connected: is_connected,
        complete,
        star: find_star(n, &adj).map(|(c, ls)| (name(c), names(&ls))),
        wheel: find_wheel(n, &adjm, &adj).map(|(h, rim)| (name(h), names(&rim))),
        bipartite: find_bipartition(n, &adj).map(|(a, b)| (names(&a), names(&b))),
        regular,
        eulerian,
        hamiltonian,
    }
}

/// Hamiltonicity alone, for callers that want the undecided case as an error.
pub fn hamiltonian(g: &Graph) -> Result<Option<Vec<String>>, StructError> {
    let (verts, _pos, adjm, adj) = support_view(g);
    let n = verts.len();
    if n > 12 {
        return Err(StructError::Undecided {
            op: "hamiltonian",
            cap: 12,
            actual: n,
        });
    }
    match hamiltonian_cycle(n, &adjm, &adj) {
        HamCycle::Yes(path) => Ok(Some(
            path.into_iter().map(|v| g.id(verts[v]).to_string()).collect(),
        )),
        _ => Ok(None),
    }
}

//! Width over tree decompositions with two-valued bags, by elimination-
//! order dynamic programming over support subsets.

use crate::error::ParamError;
use crate::result::{ParamResult, TreeDecomposition, Witness};
use std::cmp::Ordering;
use ugt_core::{q_int, q_zero, Graph, Q};

/// Vertices outside `elim ∪ {v}` reachable from v through `elim` interiors:
/// the bag partners of v when it is eliminated after `elim`.
fn boundary(adj: &[u64], v: usize, elim: u64) -> u64 {
    let mut visited = adj[v];
    let mut frontier = adj[v] & elim;
    while frontier != 0 {
        let x = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[x] & !visited & !(1 << v);
        visited |= new;
        frontier |= new & elim;
    }
    visited & !elim & !(1 << v)
}

/// Minimum over decompositions of (max bag ω-weight) − 1. Bags carry either
/// 0 or the full σ degree per vertex, so the search runs over elimination
/// orderings of the support.
pub fn treewidth(g: &Graph) -> Result<ParamResult, ParamError> {
    let m = g.model();
    let support = g.support();
    for &(u, v) in &support.edges {
        let gamma = m.gamma(g.sigma(u), g.sigma(v));
        if m.compare(g.eta(u, v).expect("stored"), &gamma) == Ordering::Greater {
            return Err(ParamError::Infeasible(format!(
                "edge {{{}, {}}} exceeds the complete-edge degree of its endpoints; \
                 no bag can cover it",
                g.id(u),
                g.id(v)
            )));
        }
    }
    let verts = support.vertices;
    let n = verts.len();
    if n > 10 {
        return Err(ParamError::Undecided {
            op: "treewidth",
            cap: 10,
            actual: n,
        });
    }
    if n == 0 {
        return Ok(ParamResult::exact(
            q_int(-1),
            Witness::Decomposition(TreeDecomposition { bags: vec![], edges: vec![] }),
        ));
    }
    let mut pos = vec![usize::MAX; g.n()];
    for (p, &v) in verts.iter().enumerate() {
        pos[v] = p;
    }
    let mut adj = vec![0u64; n];
    for &(u, v) in &support.edges {
        adj[pos[u]] |= 1 << pos[v];
        adj[pos[v]] |= 1 << pos[u];
    }
    let weights: Vec<Q> = verts.iter().map(|&v| m.omega(g.sigma(v))).collect();
    let bag_weight = |v: usize, elim: u64| -> Q {
        let mut w = weights[v].clone();
        let mut q = boundary(&adj, v, elim);
        while q != 0 {
            w += &weights[q.trailing_zeros() as usize];
            q &= q - 1;
        }
        w
    };

    // f[S] = best achievable max-bag-weight eliminating S first
    let size = 1usize << n;
    let mut f: Vec<Q> = vec![q_zero(); size];
    let mut choice: Vec<usize> = vec![usize::MAX; size];
    for s in 1..size as u64 {
        let mut best: Option<Q> = None;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            let cand = f[rest as usize].clone().max(bag_weight(v, rest));
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
                choice[s as usize] = v;
            }
        }
        f[s as usize] = best.expect("nonempty subset");
    }
    let full = (size - 1) as u64;
    let value = &f[full as usize] - q_int(1);

    // rebuild the optimal elimination order (order[0] goes first)
    let mut order = vec![0usize; n];
    let mut s = full;
    while s != 0 {
        let v = choice[s as usize];
        order[s.count_ones() as usize - 1] = v;
        s &= !(1 << v);
    }
    let mut when = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        when[v] = i;
    }
    // bag(i) = eliminated vertex + its boundary; attach to the bag of the
    // boundary vertex that leaves next
    let mut bag_masks: Vec<u64> = Vec::with_capacity(n);
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut roots: Vec<usize> = Vec::new();
    let mut elim = 0u64;
    for (i, &v) in order.iter().enumerate() {
        let q = boundary(&adj, v, elim);
        bag_masks.push(q | 1 << v);
        if q == 0 {
            roots.push(i);
        } else {
            let mut parent = usize::MAX;
            let mut bits = q;
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                if when[w] < parent || parent == usize::MAX {
                    parent = when[w];
                }
                bits &= bits - 1;
            }
            nbrs[i].push(parent);
            nbrs[parent].push(i);
        }
        elim |= 1 << v;
    }
    // a disconnected support yields one root per component: chain them
    for pair in roots.windows(2) {
        nbrs[pair[0]].push(pair[1]);
        nbrs[pair[1]].push(pair[0]);
    }
    // drop bags contained in a neighbouring bag
    let mut alive: Vec<bool> = vec![true; n];
    loop {
        let mut removed = false;
        'scan: for i in 0..n {
            if !alive[i] {
                continue;
            }
            for &j in &nbrs[i].clone() {
                if alive[j] && bag_masks[i] & !bag_masks[j] == 0 {
                    let others: Vec<usize> =
                        nbrs[i].iter().copied().filter(|&x| x != j && alive[x]).collect();
                    for x in others {
                        nbrs[x].push(j);
                        nbrs[j].push(x);
                    }
                    alive[i] = false;
                    removed = true;
                    break 'scan;
                }
            }
        }
        if !removed {
            break;
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&i| alive[i]).collect();
    let mut new_index = vec![usize::MAX; n];
    for (ni, &i) in keep.iter().enumerate() {
        new_index[i] = ni;
    }
    let bags: Vec<Vec<String>> = keep
        .iter()
        .map(|&i| {
            let mut members: Vec<usize> = (0..n).filter(|&p| bag_masks[i] >> p & 1 == 1).collect();
            members.sort_by_key(|&p| verts[p]);
            members.iter().map(|&p| g.id(verts[p]).to_string()).collect()
        })
        .collect();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for &i in &keep {
        for &j in &nbrs[i] {
            if alive[j] && new_index[i] < new_index[j] {
                edges.push((new_index[i], new_index[j]));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();

    Ok(ParamResult::exact(
        value,
        Witness::Decomposition(TreeDecomposition { bags, edges }),
    ))
}

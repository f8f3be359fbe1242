//! Maximum-weight independent sets: no strong support edge joins two
//! chosen vertices.

use crate::error::ParamError;
use crate::result::{ParamResult, Witness};
use ugt_core::{q_zero, Graph, Q};
use ugt_structure::{strong_edges, StrongVariant};

/// Maximum Σω(σ(S)) over subsets of the declared vertices with no strong
/// edge (η ⪰ connection strength) inside.
pub fn independence_number(g: &Graph) -> Result<ParamResult, ParamError> {
    let n = g.n();
    if n > 20 {
        return Err(ParamError::Undecided {
            op: "independence_number",
            cap: 20,
            actual: n,
        });
    }
    let m = g.model();
    let mut conflict = vec![0u32; n];
    for (u, v) in strong_edges(g, StrongVariant::GeqConn) {
        conflict[u] |= 1 << v;
        conflict[v] |= 1 << u;
    }
    let weights: Vec<Q> = (0..n).map(|v| m.omega(g.sigma(v))).collect();
    // suffix sums let the search cut branches that cannot catch up
    let mut suffix = vec![q_zero(); n + 1];
    for v in (0..n).rev() {
        suffix[v] = &suffix[v + 1] + &weights[v];
    }

    let mut best = q_zero();
    let mut best_mask = 0u32;
    let mut cur = Vec::with_capacity(n);
    fn go(
        v: usize,
        mask: u32,
        acc: Q,
        cur: &mut Vec<usize>,
        best: &mut Q,
        best_mask: &mut u32,
        conflict: &[u32],
        weights: &[Q],
        suffix: &[Q],
    ) {
        if acc > *best {
            *best = acc.clone();
            *best_mask = mask;
        }
        if v == weights.len() || &acc + &suffix[v] <= *best {
            return;
        }
        if conflict[v] & mask == 0 {
            cur.push(v);
            go(
                v + 1,
                mask | 1 << v,
                &acc + &weights[v],
                cur,
                best,
                best_mask,
                conflict,
                weights,
                suffix,
            );
            cur.pop();
        }
        go(v + 1, mask, acc, cur, best, best_mask, conflict, weights, suffix);
    }
    go(
        0,
        0,
        q_zero(),
        &mut cur,
        &mut best,
        &mut best_mask,
        &conflict,
        &weights,
        &suffix,
    );
    let members: Vec<String> = (0..n)
        .filter(|&i| best_mask >> i & 1 == 1)
        .map(|i| g.id(i).to_string())
        .collect();
    Ok(ParamResult::exact(best, Witness::VertexSet(members)))
}

//! Chordality of the support graph, classical or degree-aware.

use crate::error::StructError;
use std::cmp::Ordering;
use ugt_core::{Degree, Graph};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChordMode {
    /// any chord suffices
    Support,
    /// the chord degree must reach the cycle's weakest edge degree
    FuzzyChord,
}

impl ChordMode {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "support" => ChordMode::Support,
            "fuzzy_chord" => ChordMode::FuzzyChord,
            _ => return None,
        })
    }
}

/// Does this cycle (dense support indices, in order) admit a qualifying
/// chord?
fn has_chord(
    g: &Graph,
    verts: &[usize],
    cycle: &[usize],
    adjm: &[Vec<bool>],
    mode: ChordMode,
) -> bool {
    let n = cycle.len();
    let weakest: Option<Degree> = match mode {
        ChordMode::Support => None,
        ChordMode::FuzzyChord => {
            let m = g.model();
            let mut w: Option<Degree> = None;
            for i in 0..n {
                let (a, b) = (verts[cycle[i]], verts[cycle[(i + 1) % n]]);
                let d = g.eta(a.min(b), a.max(b)).expect("cycle edge").clone();
                w = Some(match w {
                    None => d,
                    Some(cur) => m.deg_min(&cur, &d).clone(),
                });
            }
            w
        }
    };
    for i in 0..n {
        for j in i + 1..n {
            // skip consecutive positions (incl. the wrap-around pair)
            if j == i + 1 || (i == 0 && j == n - 1) {
                continue;
            }
            let (a, b) = (cycle[i], cycle[j]);
            if !adjm[a][b] {
                continue;
            }
            match &weakest {
                None => return true,
                Some(w) => {
                    let (u, v) = (verts[a], verts[b]);
                    let d = g.eta(u.min(v), u.max(v)).expect("support edge");
                    if g.model().compare(d, w) != Ordering::Less {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Every support cycle on ≥ 4 vertices must have a qualifying chord.
/// Cycles are enumerated canonically: smallest vertex first, second
/// neighbor below the last to kill the mirrored traversal.
pub fn chordality(g: &Graph, mode: ChordMode) -> Result<bool, StructError> {
    let verts: Vec<usize> = (0..g.n()).filter(|&i| g.is_support_vertex(i)).collect();
    let n = verts.len();
    if n > 12 {
        return Err(StructError::Undecided {
            op: "chordality",
            cap: 12,
            actual: n,
        });
    }
    let mut pos = vec![usize::MAX; g.n()];
    for (p, &v) in verts.iter().enumerate() {
        pos[v] = p;
    }
    let mut adjm = vec![vec![false; n]; n];
    let mut adj = vec![Vec::new(); n];
    for (i, j) in g.support().edges {
        let (a, b) = (pos[i], pos[j]);
        adjm[a][b] = true;
        adjm[b][a] = true;
        adj[a].push(b);
        adj[b].push(a);
    }
    for row in &mut adj {
        row.sort_unstable();
    }

    struct Ctx<'a> {
        g: &'a Graph,
        verts: &'a [usize],
        adjm: &'a [Vec<bool>],
        adj: &'a [Vec<usize>],
        mode: ChordMode,
    }

    // extend a path start..=at by vertices larger than the start; closing
    // back to the start yields each cycle exactly once
    fn extend(c: &Ctx, start: usize, path: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let at = *path.last().expect("nonempty");
        for &w in &c.adj[at] {
            if w == start && path.len() >= 4 {
                // mirrored copy excluded: require second vertex < last
                if path[1] < at && !has_chord(c.g, c.verts, path, c.adjm, c.mode) {
                    return false;
                }
            }
            if w <= start || used[w] {
                continue;
            }
            used[w] = true;
            path.push(w);
            if !extend(c, start, path, used) {
                return false;
            }
            path.pop();
            used[w] = false;
        }
        true
    }

    let ctx = Ctx { g, verts: &verts, adjm: &adjm, adj: &adj, mode };
    for start in 0..n {
        let mut used = vec![false; n];
        used[start] = true;
        let mut path = vec![start];
        if !extend(&ctx, start, &mut path, &mut used) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::fuzzy;

    fn chordal_example() -> ugt_core::Graph {
        fuzzy(
            &[("v1", "0.9"), ("v2", "0.8"), ("v3", "0.7"), ("v4", "0.8")],
            &[
                ("v1", "v2", "0.6"),
                ("v2", "v3", "0.5"),
                ("v3", "v4", "0.4"),
                ("v4", "v1", "0.5"),
                ("v1", "v3", "0.4"),
            ],
        )
    }

    #[test]
    fn strong_chord_passes_both_modes() {
        let g = chordal_example();
        assert!(chordality(&g, ChordMode::Support).unwrap());
        assert!(chordality(&g, ChordMode::FuzzyChord).unwrap());
    }

    #[test]
    fn weak_chord_fails_only_the_degree_mode() {
        let g = fuzzy(
            &[("v1", "0.9"), ("v2", "0.8"), ("v3", "0.7"), ("v4", "0.8")],
            &[
                ("v1", "v2", "0.6"),
                ("v2", "v3", "0.5"),
                ("v3", "v4", "0.4"),
                ("v4", "v1", "0.5"),
                ("v1", "v3", "0.3"),
            ],
        );
        assert!(chordality(&g, ChordMode::Support).unwrap());
        assert!(!chordality(&g, ChordMode::FuzzyChord).unwrap());
    }

    #[test]
    fn chordless_square_fails_both_modes() {
        let g = fuzzy(
            &[("a", "1"), ("b", "1"), ("c", "1"), ("d", "1")],
            &[
                ("a", "b", "0.5"),
                ("b", "c", "0.5"),
                ("c", "d", "0.5"),
                ("d", "a", "0.5"),
            ],
        );
        assert!(!chordality(&g, ChordMode::Support).unwrap());
        assert!(!chordality(&g, ChordMode::FuzzyChord).unwrap());
    }

    #[test]
    fn triangles_are_chordal() {
        let g = fuzzy(
            &[("a", "1"), ("b", "1"), ("c", "1")],
            &[("a", "b", "0.5"), ("b", "c", "0.4"), ("a", "c", "0.3")],
        );
        assert!(chordality(&g, ChordMode::Support).unwrap());
        assert!(chordality(&g, ChordMode::FuzzyChord).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let ids: Vec<String> = (0..13).map(|i| format!("v{i}")).collect();
        let verts: Vec<(&str, &str)> = ids.iter().map(|s| (s.as_str(), "1")).collect();
        let g = fuzzy(&verts, &[]);
        assert!(matches!(
            chordality(&g, ChordMode::Support),
            Err(StructError::Undecided { op: "chordality", .. })
        ));
    }
}

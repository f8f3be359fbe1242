//! Wiener and Sombor indices, in the general weighted form and the
//! one-dimensional strong-geodesic form.

use crate::error::ParamError;
use std::collections::VecDeque;
use ugt_core::{q_to_f64, q_zero, Graph, ModelKind, Q};
use ugt_structure::{metrics, strong_edges, StructError, StrongVariant};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IndexKind {
    WienerUncertain,
    WienerFuzzy,
    SomborUncertain,
    SomborFuzzy,
}

impl IndexKind {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "wiener_uncertain" => IndexKind::WienerUncertain,
            "wiener_fuzzy" => IndexKind::WienerFuzzy,
            "sombor_uncertain" => IndexKind::SomborUncertain,
            "sombor_fuzzy" => IndexKind::SomborFuzzy,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum IndexValue {
    Exact(Q),
    Approx(f64),
}

pub fn topological_index(g: &Graph, kind: IndexKind) -> Result<IndexValue, ParamError> {
    match kind {
        IndexKind::WienerUncertain => wiener_uncertain(g),
        IndexKind::WienerFuzzy => wiener_fuzzy(g),
        IndexKind::SomborUncertain => Ok(IndexValue::Approx(sombor(g, false)?)),
        IndexKind::SomborFuzzy => Ok(IndexValue::Approx(sombor(g, true)?)),
    }
}

/// Σ over support pairs of ω(σu)·ω(σv)·d(u,v) with reciprocal-score edge
/// lengths.
fn wiener_uncertain(g: &Graph) -> Result<IndexValue, ParamError> {
    let rep = match metrics(g) {
        Ok(rep) => rep,
        Err(StructError::EmptySupport) => return Ok(IndexValue::Exact(q_zero())),
        Err(e) => return Err(e.into()),
    };
    let m = g.model();
    let w: Vec<Q> = rep
        .vertices
        .iter()
        .map(|id| m.omega(g.sigma(g.vertex(id).expect("reported id"))))
        .collect();
    let mut total = q_zero();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            total += &w[i] * &w[j] * &rep.distance[i][j];
        }
    }
    Ok(IndexValue::Exact(total))
}

/// Fuzzy Wiener: distances are the lightest Σμ over minimum-hop strong
/// paths; pairs weighted by σ(u)σ(v).
fn wiener_fuzzy(g: &Graph) -> Result<IndexValue, ParamError> {
    if g.model().kind != ModelKind::Fuzzy {
        return Err(ParamError::Infeasible(
            "the fuzzy Wiener index needs a one-dimensional fuzzy model".into(),
        ));
    }
    let verts: Vec<usize> = (0..g.n()).filter(|&v| g.is_support_vertex(v)).collect();
    let n = verts.len();
    let mut pos = vec![usize::MAX; g.n()];
    for (p, &v) in verts.iter().enumerate() {
        pos[v] = p;
    }
    let mu = |u: usize, v: usize| -> Q { g.eta(u, v).expect("stored").components()[0].clone() };
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, v) in strong_edges(g, StrongVariant::GeqWithoutEdge) {
        adj[pos[u]].push(pos[v]);
        adj[pos[v]].push(pos[u]);
    }
    for a in adj.iter_mut() {
        a.sort_unstable();
    }

    let sigma: Vec<Q> = verts
        .iter()
        .map(|&v| g.sigma(v).components()[0].clone())
        .collect();
    let mut total = q_zero();
    for s in 0..n {
        // BFS layers fix the hop counts; relaxing along them finds the
        // lightest geodesic weight
        let mut hop = vec![usize::MAX; n];
        let mut dw: Vec<Q> = vec![q_zero(); n];
        hop[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                let step = &dw[x] + &mu(verts[x], verts[y]);
                if hop[y] == usize::MAX {
                    hop[y] = hop[x] + 1;
                    dw[y] = step;
                    queue.push_back(y);
                } else if hop[y] == hop[x] + 1 && step < dw[y] {
                    dw[y] = step;
                }
            }
        }
        if hop.iter().any(|&h| h == usize::MAX) {
            return Err(ParamError::Struct(StructError::Disconnected));
        }
        for t in s + 1..n {
            total += &sigma[s] * &sigma[t] * &dw[t];
        }
    }
    Ok(IndexValue::Exact(total))
}

/// Σ over support edges of √(x² + y²) where x, y weight each endpoint by
/// its degree: ω(σ)·Σδ(η) in general, σ·Σμ in the fuzzy form.
fn sombor(g: &Graph, fuzzy_form: bool) -> Result<f64, ParamError> {
    let m = g.model();
    if fuzzy_form && m.kind != ModelKind::Fuzzy {
        return Err(ParamError::Infeasible(
            "the fuzzy Sombor index needs a one-dimensional fuzzy model".into(),
        ));
    }
    let mut load: Vec<Q> = vec![q_zero(); g.n()];
    for (u, v, eta) in g.edges() {
        let d = if fuzzy_form {
            eta.components()[0].clone()
        } else {
            m.delta_edge(eta)
        };
        load[u] += &d;
        load[v] += &d;
    }
    let f: Vec<f64> = (0..g.n())
        .map(|v| {
            let scale = if fuzzy_form {
                g.sigma(v).components()[0].clone()
            } else {
                m.omega(g.sigma(v))
            };
            q_to_f64(&(scale * &load[v]))
        })
        .collect();
    let mut total = 0.0;
    for (u, v) in g.support().edges {
        total += f[u].hypot(f[v]);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{ex_3_8_2, fuzzy};
    use ugt_core::q_from;

    #[test]
    fn wiener_on_the_path() {
        let r = topological_index(&ex_3_8_2(), IndexKind::WienerUncertain).unwrap();
        assert_eq!(r, IndexValue::Exact(q_from(2281, 200)));
    }

    #[test]
    fn wiener_single_vertex_is_zero() {
        let g = fuzzy(&[("a", "0.7")], &[]);
        let r = topological_index(&g, IndexKind::WienerUncertain).unwrap();
        assert_eq!(r, IndexValue::Exact(q_from(0, 1)));
    }

    #[test]
    fn wiener_disconnected_errors() {
        let g = fuzzy(&[("a", "0.7"), ("b", "0.7")], &[]);
        assert!(matches!(
            topological_index(&g, IndexKind::WienerUncertain),
            Err(ParamError::Struct(StructError::Disconnected))
        ));
    }

    #[test]
    fn fuzzy_wiener_on_the_path() {
        let r = topological_index(&ex_3_8_2(), IndexKind::WienerFuzzy).unwrap();
        assert_eq!(r, IndexValue::Exact(q_from(1009, 200)));
    }

    #[test]
    fn fuzzy_wiener_takes_lightest_geodesic() {
        // two 2-hop routes between opposite corners; the lighter one counts
        let g = fuzzy(
            &[("a", "1"), ("b", "1"), ("c", "1"), ("d", "1")],
            &[
                ("a", "b", "0.9"),
                ("b", "c", "0.9"),
                ("c", "d", "0.4"),
                ("d", "a", "0.4"),
            ],
        );
        let r = topological_index(&g, IndexKind::WienerFuzzy).unwrap();
        assert_eq!(r, IndexValue::Exact(q_from(47, 10)));
    }

    #[test]
    fn sombor_fuzzy_on_the_path() {
        let r = topological_index(&ex_3_8_2(), IndexKind::SomborFuzzy).unwrap();
        let expected = 2.0 * 1.6f64.sqrt() + 1.04 * 2.0f64.sqrt();
        match r {
            IndexValue::Approx(x) => assert!((x - expected).abs() < 1e-12),
            _ => panic!("expected a float"),
        }
    }

    #[test]
    fn sombor_uncertain_matches_fuzzy_form_on_fuzzy_graphs() {
        let a = topological_index(&ex_3_8_2(), IndexKind::SomborUncertain).unwrap();
        let b = topological_index(&ex_3_8_2(), IndexKind::SomborFuzzy).unwrap();
        match (a, b) {
            (IndexValue::Approx(x), IndexValue::Approx(y)) => {
                assert!((x - y).abs() < 1e-12)
            }
            _ => panic!("expected floats"),
        }
    }
}

//! Rough uncertain graphs: lower and upper approximations of an
//! interval-valued graph under indiscernibility partitions.

use crate::error::ConstructError;
use ugt_core::{ConstraintProfile, Degree, Graph, Model, ModelKind, Violation};

fn interval_model() -> Model {
    Model::new(ModelKind::Interval, 2, ConstraintProfile::FuzzyCap, None)
        .expect("interval model with componentwise cap")
}

/// Componentwise min / max over a class of interval degrees.
fn class_bounds(degrees: &[&Degree]) -> (Degree, Degree) {
    let first = degrees[0].clone();
    degrees[1..].iter().fold((first.clone(), first), |(lo, hi), d| {
        (lo.component_min(d), hi.component_max(d))
    })
}

/// Lower and upper approximations of an interval-valued uncertain graph.
/// The vertex and edge partitions define indiscernibility classes; the lower
/// graph takes componentwise minima over each class, the upper graph maxima.
/// Both must satisfy the compatibility condition P ⪯ Σ∧Σ on every edge,
/// reported per offending edge when violated.
pub fn rough_graph(
    vertices: &[(String, Degree)],
    edges: &[(String, String, Degree)],
    vertex_classes: &[Vec<String>],
    edge_classes: &[Vec<(String, String)>],
) -> Result<(Graph, Graph), ConstructError> {
    let model = interval_model();

    let mut bad = Vec::new();
    for (id, d) in vertices {
        if let Err(why) = model.check_degree(d) {
            bad.push(Violation::new(format!("bad vertex interval: {why}"), id));
        }
    }
    for (u, v, d) in edges {
        if let Err(why) = model.check_degree(d) {
            bad.push(Violation::new(
                format!("bad edge interval: {why}"),
                format!("{{{u},{v}}}"),
            ));
        }
    }
    if !bad.is_empty() {
        return Err(ConstructError::Incompatible(bad));
    }

    let vertex_of = |id: &str| vertices.iter().position(|(v, _)| v == id);
    let mut vclass = vec![usize::MAX; vertices.len()];
    for (c, class) in vertex_classes.iter().enumerate() {
        for id in class {
            let Some(i) = vertex_of(id) else {
                return Err(ConstructError::Input(format!(
                    "vertex partition names undeclared vertex {id}"
                )));
            };
            if vclass[i] != usize::MAX {
                return Err(ConstructError::Input(format!(
                    "vertex {id} appears in two classes"
                )));
            }
            vclass[i] = c;
        }
    }
    if let Some(i) = vclass.iter().position(|&c| c == usize::MAX) {
        return Err(ConstructError::Input(format!(
            "vertex partition misses {}",
            vertices[i].0
        )));
    }

    let norm = |u: &str, v: &str| -> Option<(usize, usize)> {
        let (a, b) = (vertex_of(u)?, vertex_of(v)?);
        Some((a.min(b), a.max(b)))
    };
    let keys: Vec<(usize, usize)> = edges
        .iter()
        .map(|(u, v, _)| norm(u, v).expect("validated endpoints"))
        .collect();
    let mut eclass = vec![usize::MAX; edges.len()];
    for (c, class) in edge_classes.iter().enumerate() {
        for (u, v) in class {
            let key = norm(u, v).ok_or_else(|| {
                ConstructError::Input(format!(
                    "edge partition names undeclared endpoint in {{{u},{v}}}"
                ))
            })?;
            let Some(i) = keys.iter().position(|k| *k == key) else {
                return Err(ConstructError::Input(format!(
                    "edge partition names unknown edge {{{u},{v}}}"
                )));
            };
            if eclass[i] != usize::MAX {
                return Err(ConstructError::Input(format!(
                    "edge {{{u},{v}}} appears in two classes"
                )));
            }
            eclass[i] = c;
        }
    }
    if let Some(i) = eclass.iter().position(|&c| c == usize::MAX) {
        let (u, v, _) = &edges[i];
        return Err(ConstructError::Input(format!(
            "edge partition misses {{{u},{v}}}"
        )));
    }

    let sigma_bounds: Vec<(Degree, Degree)> = (0..vertices.len())
        .map(|i| {
            let members: Vec<&Degree> = (0..vertices.len())
                .filter(|&j| vclass[j] == vclass[i])
                .map(|j| &vertices[j].1)
                .collect();
            class_bounds(&members)
        })
        .collect();
    let p_bounds: Vec<(Degree, Degree)> = (0..edges.len())
        .map(|i| {
            let members: Vec<&Degree> = (0..edges.len())
                .filter(|&j| eclass[j] == eclass[i])
                .map(|j| &edges[j].2)
                .collect();
            class_bounds(&members)
        })
        .collect();

    let mut incompat = Vec::new();
    for (i, (u, v, _)) in edges.iter().enumerate() {
        let (a, b) = keys[i];
        let caps_low = sigma_bounds[a].0.component_min(&sigma_bounds[b].0);
        let caps_high = sigma_bounds[a].1.component_min(&sigma_bounds[b].1);
        let le = |x: &Degree, cap: &Degree| {
            x.components()
                .iter()
                .zip(cap.components())
                .all(|(p, q)| p <= q)
        };
        if !le(&p_bounds[i].0, &caps_low) {
            incompat.push(Violation::new(
                "lower approximation violates P ⪯ Σ∧Σ",
                format!("{{{u},{v}}}"),
            ));
        }
        if !le(&p_bounds[i].1, &caps_high) {
            incompat.push(Violation::new(
                "upper approximation violates P ⪯ Σ∧Σ",
                format!("{{{u},{v}}}"),
            ));
        }
    }
    if !incompat.is_empty() {
        return Err(ConstructError::Incompatible(incompat));
    }

    let build = |pick: &dyn Fn(usize) -> Degree, pick_e: &dyn Fn(usize) -> Degree| {
        Graph::new(
            interval_model(),
            vertices
                .iter()
                .enumerate()
                .map(|(i, (id, _))| (id.clone(), pick(i)))
                .collect(),
            edges
                .iter()
                .enumerate()
                .map(|(i, (u, v, _))| (u.clone(), v.clone(), pick_e(i)))
                .collect(),
        )
    };
    let lower = build(&|i| sigma_bounds[i].0.clone(), &|i| p_bounds[i].0.clone())?;
    let upper = build(&|i| sigma_bounds[i].1.clone(), &|i| p_bounds[i].1.clone())?;
    Ok((lower, upper))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ugt_core::parse_q;

    fn iv(lo: &str, hi: &str) -> Degree {
        Degree::new(vec![parse_q(lo).unwrap(), parse_q(hi).unwrap()])
    }

    fn singleton_classes(ids: &[&str]) -> Vec<Vec<String>> {
        ids.iter().map(|s| vec![s.to_string()]).collect()
    }

    #[test]
    fn singleton_classes_reproduce_the_input() {
        let verts = vec![
            ("a".to_string(), iv("0.2", "0.4")),
            ("b".to_string(), iv("0.5", "0.8")),
        ];
        let edges = vec![("a".to_string(), "b".to_string(), iv("0.1", "0.3"))];
        let (lo, hi) = rough_graph(
            &verts,
            &edges,
            &singleton_classes(&["a", "b"]),
            &[vec![("a".to_string(), "b".to_string())]],
        )
        .unwrap();
        for g in [&lo, &hi] {
            assert_eq!(g.sigma(0), &iv("1/5", "2/5"));
            assert_eq!(g.eta_or_zero(0, 1), iv("1/10", "3/10"));
        }
    }

    #[test]
    fn merged_vertex_class_takes_min_and_max() {
        let verts = vec![
            ("a".to_string(), iv("0.2", "0.4")),
            ("b".to_string(), iv("0.6", "0.8")),
        ];
        let (lo, hi) = rough_graph(
            &verts,
            &[],
            &[vec!["a".to_string(), "b".to_string()]],
            &[],
        )
        .unwrap();
        assert_eq!(lo.sigma(0), &iv("1/5", "2/5"));
        assert_eq!(lo.sigma(1), &iv("1/5", "2/5"));
        assert_eq!(hi.sigma(0), &iv("3/5", "4/5"));
    }

    #[test]
    fn merged_edge_class_bounds() {
        let verts = vec![
            ("a".to_string(), iv("0.9", "1")),
            ("b".to_string(), iv("0.9", "1")),
            ("c".to_string(), iv("0.9", "1")),
        ];
        let edges = vec![
            ("a".to_string(), "b".to_string(), iv("0.1", "0.2")),
            ("b".to_string(), "c".to_string(), iv("0.3", "0.5")),
        ];
        let (lo, hi) = rough_graph(
            &verts,
            &edges,
            &singleton_classes(&["a", "b", "c"]),
            &[vec![
                ("a".to_string(), "b".to_string()),
                ("b".to_string(), "c".to_string()),
            ]],
        )
        .unwrap();
        assert_eq!(lo.eta_or_zero(0, 1), iv("1/10", "1/5"));
        assert_eq!(lo.eta_or_zero(1, 2), iv("1/10", "1/5"));
        assert_eq!(hi.eta_or_zero(0, 1), iv("3/10", "1/2"));
    }

    #[test]
    fn incompatible_edge_is_reported_by_pair() {
        // P exceeds Σ∧Σ at {a,b} in both approximations
        let verts = vec![
            ("a".to_string(), iv("0.2", "0.2")),
            ("b".to_string(), iv("0.9", "0.9")),
        ];
        let edges = vec![("a".to_string(), "b".to_string(), iv("0.5", "0.5"))];
        let err = rough_graph(
            &verts,
            &edges,
            &singleton_classes(&["a", "b"]),
            &[vec![("a".to_string(), "b".to_string())]],
        )
        .unwrap_err();
        let text = err.to_string();
        assert!(text.contains("{a,b}"), "{text}");
        assert!(text.contains("violates"));
    }

    #[test]
    fn partition_must_cover() {
        let verts = vec![
            ("a".to_string(), iv("0.2", "0.4")),
            ("b".to_string(), iv("0.5", "0.8")),
        ];
        let err = rough_graph(&verts, &[], &singleton_classes(&["a"]), &[]).unwrap_err();
        assert!(err.to_string().contains("misses b"));
    }

    #[test]
    fn lower_degrees_never_exceed_upper() {
        let verts = vec![
            ("a".to_string(), iv("0.3", "0.6")),
            ("b".to_string(), iv("0.5", "0.7")),
            ("c".to_string(), iv("0.2", "0.9")),
        ];
        let edges = vec![
            ("a".to_string(), "b".to_string(), iv("0.2", "0.5")),
            ("b".to_string(), "c".to_string(), iv("0.1", "0.6")),
        ];
        let (lo, hi) = rough_graph(
            &verts,
            &edges,
            &[vec!["a".to_string(), "c".to_string()], vec!["b".to_string()]],
            &[vec![
                ("a".to_string(), "b".to_string()),
                ("b".to_string(), "c".to_string()),
            ]],
        )
        .unwrap();
        for i in 0..3 {
            for (p, q) in lo.sigma(i).components().iter().zip(hi.sigma(i).components()) {
                assert!(p <= q);
            }
        }
        for (i, j, d) in lo.edges() {
            for (p, q) in d.components().iter().zip(hi.eta_or_zero(i, j).components()) {
                assert!(p <= q);
            }
        }
    }
}

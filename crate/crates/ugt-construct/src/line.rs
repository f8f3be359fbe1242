//! Line graph of an uncertain graph.

use crate::error::ConstructError;
use ugt_core::{Graph, Model, ModelKind, ConstraintProfile};

/// Line graph: one vertex per support edge carrying that edge's degree, and
/// an adjacency degree — the order-lesser of the two edge degrees — exactly
/// when the edges share an endpoint. Its support graph is the classical line
/// graph of the input's support graph.
pub fn line_graph(g: &Graph) -> Result<Graph, ConstructError> {
    let model = g.model();
    let pairs: Vec<(usize, usize)> = g.edges().map(|(i, j, _)| (i, j)).collect();
    let vertices: Vec<(String, _)> = g
        .edges()
        .map(|(i, j, d)| (format!("{}|{}", g.id(i), g.id(j)), d.clone()))
        .collect();

    let mut edges = Vec::new();
    for e in 0..pairs.len() {
        for f in e + 1..pairs.len() {
            let (a, b) = pairs[e];
            let (c, d) = pairs[f];
            if a == c || a == d || b == c || b == d {
                let de = g.eta(pairs[e].0, pairs[e].1).expect("support edge");
                let df = g.eta(pairs[f].0, pairs[f].1).expect("support edge");
                edges.push((
                    vertices[e].0.clone(),
                    vertices[f].0.clone(),
                    model.deg_min(de, df).clone(),
                ));
            }
        }
    }

    // at k=1 the order-lesser operand is the componentwise min, so the fuzzy
    // cap survives; for wider kinds the lesser-by-score operand can exceed the
    // other componentwise, so the capped profiles are lifted on the output
    let out_model = if model.kind == ModelKind::Fuzzy {
        model.clone()
    } else {
        Model::new(
            model.kind,
            model.k,
            ConstraintProfile::None,
            model.dombi_lambda.clone(),
        )?
    };
    Ok(Graph::new(out_model, vertices, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ugt_core::{parse_q, Degree};

    fn deg(m: &str) -> Degree {
        Degree::new(vec![parse_q(m).unwrap()])
    }

    fn fuzzy(verts: &[(&str, &str)], edges: &[(&str, &str, &str)]) -> Graph {
        Graph::new(
            Model::fuzzy(),
            verts.iter().map(|(v, s)| (v.to_string(), deg(s))).collect(),
            edges
                .iter()
                .map(|(u, v, m)| (u.to_string(), v.to_string(), deg(m)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn path_gives_single_adjacency() {
        let g = fuzzy(
            &[("v1", "0.8"), ("v2", "0.7"), ("v3", "0.6")],
            &[("v1", "v2", "0.6"), ("v2", "v3", "0.5")],
        );
        let l = line_graph(&g).unwrap();
        assert_eq!(l.n(), 2);
        assert_eq!(l.ids(), ["v1|v2", "v2|v3"]);
        assert_eq!(l.sigma(0), &deg("3/5"));
        assert_eq!(l.sigma(1), &deg("1/2"));
        assert_eq!(l.eta_or_zero(0, 1), deg("1/2"));
    }

    #[test]
    fn edgeless_input_gives_empty_line_graph() {
        let g = fuzzy(&[("v1", "0.8"), ("v2", "0.7")], &[]);
        let l = line_graph(&g).unwrap();
        assert_eq!(l.n(), 0);
    }

    #[test]
    fn triangle_maps_to_triangle() {
        let g = fuzzy(
            &[("a", "0.9"), ("b", "0.8"), ("c", "0.7")],
            &[("a", "b", "0.5"), ("a", "c", "0.6"), ("b", "c", "0.4")],
        );
        let l = line_graph(&g).unwrap();
        assert_eq!(l.n(), 3);
        assert_eq!(l.edge_count(), 3);
    }

    #[test]
    fn disjoint_edges_stay_nonadjacent() {
        let g = fuzzy(
            &[("a", "1"), ("b", "1"), ("c", "1"), ("d", "1")],
            &[("a", "b", "0.5"), ("c", "d", "0.6")],
        );
        let l = line_graph(&g).unwrap();
        assert_eq!(l.n(), 2);
        assert_eq!(l.edge_count(), 0);
    }
}

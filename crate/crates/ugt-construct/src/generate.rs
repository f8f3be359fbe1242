//! Canonical graph generators: complete, star, wheel. Every emitted edge
//! carries the complete-edge degree Γ of its endpoints, which is the unique
//! maximal decoration under the componentwise cap.

use crate::error::ConstructError;
use ugt_core::{Degree, Graph, Model};

#[derive(Debug, Clone)]
pub enum GenerateKind {
    Complete(Vec<Degree>),
    /// center degree, then the leaves
    Star(Degree, Vec<Degree>),
    /// hub degree, then the rim in cycle order
    Wheel(Degree, Vec<Degree>),
}

pub fn generate(model: &Model, kind: &GenerateKind) -> Result<Graph, ConstructError> {
    let (vertices, edges) = match kind {
        GenerateKind::Complete(sigmas) => {
            if sigmas.is_empty() {
                return Err(ConstructError::Input(
                    "a complete graph needs at least one vertex".into(),
                ));
            }
            let verts: Vec<(String, Degree)> = sigmas
                .iter()
                .enumerate()
                .map(|(i, s)| (format!("v{}", i + 1), s.clone()))
                .collect();
            let mut edges = Vec::new();
            for i in 0..verts.len() {
                for j in i + 1..verts.len() {
                    edges.push((
                        verts[i].0.clone(),
                        verts[j].0.clone(),
                        model.gamma(&verts[i].1, &verts[j].1),
                    ));
                }
            }
            (verts, edges)
        }
        GenerateKind::Star(center, leaves) => {
            if leaves.is_empty() {
                return Err(ConstructError::Input("a star needs at least one leaf".into()));
            }
            let mut verts = vec![("c".to_string(), center.clone())];
            let mut edges = Vec::new();
            for (i, l) in leaves.iter().enumerate() {
                let id = format!("u{}", i + 1);
                edges.push(("c".to_string(), id.clone(), model.gamma(center, l)));
                verts.push((id, l.clone()));
            }
            (verts, edges)
        }
        GenerateKind::Wheel(hub, rim) => {
            if rim.len() < 3 {
                return Err(ConstructError::Input(
                    "a wheel needs at least three rim vertices".into(),
                ));
            }
            let mut verts = vec![("c".to_string(), hub.clone())];
            let mut edges = Vec::new();
            for (i, r) in rim.iter().enumerate() {
                let id = format!("v{}", i + 1);
                edges.push(("c".to_string(), id.clone(), model.gamma(hub, r)));
                verts.push((id, r.clone()));
            }
            for i in 0..rim.len() {
                let j = (i + 1) % rim.len();
                edges.push((
                    format!("v{}", i + 1),
                    format!("v{}", j + 1),
                    model.gamma(&rim[i], &rim[j]),
                ));
            }
            (verts, edges)
        }
    };
    Ok(Graph::new(model.clone(), vertices, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ugt_core::parse_q;
    use ugt_structure::shape;

    fn deg(m: &str) -> Degree {
        Degree::new(vec![parse_q(m).unwrap()])
    }

    fn degs(ms: &[&str]) -> Vec<Degree> {
        ms.iter().map(|m| deg(m)).collect()
    }

    #[test]
    fn complete_three_vertices() {
        let g = generate(
            &Model::fuzzy(),
            &GenerateKind::Complete(degs(&["0.9", "0.7", "0.5"])),
        )
        .unwrap();
        assert_eq!(g.eta_or_zero(0, 1), deg("7/10"));
        assert_eq!(g.eta_or_zero(0, 2), deg("1/2"));
        assert_eq!(g.eta_or_zero(1, 2), deg("1/2"));
        assert!(shape(&g).complete);
    }

    #[test]
    fn star_shape_is_recognized() {
        let g = generate(
            &Model::fuzzy(),
            &GenerateKind::Star(deg("0.9"), degs(&["0.7", "0.6", "0.8", "0.5"])),
        )
        .unwrap();
        let (center, leaves) = shape(&g).star.expect("star");
        assert_eq!(center, "c");
        assert_eq!(leaves.len(), 4);
        assert_eq!(g.eta_or_zero(0, 1), deg("7/10"));
    }

    #[test]
    fn wheel_shape_is_recognized() {
        let g = generate(
            &Model::fuzzy(),
            &GenerateKind::Wheel(deg("0.9"), degs(&["0.8", "0.7", "0.6"])),
        )
        .unwrap();
        let (hub, rim) = shape(&g).wheel.expect("wheel");
        assert_eq!(hub, "c");
        assert_eq!(rim.len(), 3);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn size_preconditions() {
        assert!(generate(&Model::fuzzy(), &GenerateKind::Complete(vec![])).is_err());
        assert!(generate(&Model::fuzzy(), &GenerateKind::Star(deg("1"), vec![])).is_err());
        assert!(
            generate(&Model::fuzzy(), &GenerateKind::Wheel(deg("1"), degs(&["1", "1"]))).is_err()
        );
    }
}

//! Structural layer over uncertainty-decorated graphs: connectivity
//! strengths, strong edges, cycles and trees, rational distances, shape
//! recognition, chordality, medians, and graph-class predicates.

mod chordal;
mod classes;
mod error;
mod metrics;
mod paths;
mod shape;

pub use chordal::{chordality, ChordMode};
pub use classes::{
    class_check, degree_order_size, density_balanced, find_threshold, ClassReport, ClassSpec,
    DensityConvention, DensityReport,
};
pub use error::StructError;
pub use metrics::{is_median_graph, median, metrics, MedianMode, MetricReport};
pub use paths::{
    conn_strength, conn_strength_opt, is_uncertain_cycle, is_uncertain_tree, strong_edges,
    CycleWitness, StrongVariant,
};
pub use shape::{hamiltonian, shape, HamiltonianStatus, ShapeReport};

#[cfg(test)]
pub(crate) mod testutil {
    use ugt_core::{parse_q, Degree, Graph, Model};

    /// builds a validated fuzzy graph from string-valued memberships
    pub fn fuzzy(verts: &[(&str, &str)], edges: &[(&str, &str, &str)]) -> Graph {
        Graph::new(
            Model::fuzzy(),
            verts
                .iter()
                .map(|(id, s)| (id.to_string(), Degree::new(vec![parse_q(s).unwrap()])))
                .collect(),
            edges
                .iter()
                .map(|(u, v, e)| {
                    (
                        u.to_string(),
                        v.to_string(),
                        Degree::new(vec![parse_q(e).unwrap()]),
                    )
                })
                .collect(),
        )
        .unwrap()
    }
}

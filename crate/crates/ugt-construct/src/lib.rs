//! Derived uncertain graphs — intersections, line graphs, Cayley and
//! zero-divisor graphs, tolerance and rough graphs, indexed families, random
//! realizations — plus validation for the decorated graph variants.

pub mod docs;
mod error;
mod family;
mod generate;
mod group;
mod interval;
mod line;
mod random;
mod rough;
mod sets;
mod variants;
mod zerodiv;

pub use error::ConstructError;
pub use family::{family_slice, DynamicGraph, Family, KnowledgeGraph, Slice, SoftFamily, Triple};
pub use generate::{generate, GenerateKind};
pub use group::{cayley_graph, GroupSpec};
pub use interval::{tolerance_graph, FuzzyInterval};
pub use line::line_graph;
pub use random::{sample_random, DegreeDist, RandomTemplate};
pub use rough::rough_graph;
pub use sets::{intersection_graph, UncertainSet};
pub use variants::{
    validate_variant, Arc, IdArc, Link, PsiEntry, TauEntry, ValidationReport, VariantGraph,
    VariantPayload,
};
pub use zerodiv::{zero_divisor_graph, zero_divisors};

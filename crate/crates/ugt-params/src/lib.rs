//! Exact graph parameters with witnesses: domination, independence,
//! matching, vertex covers, level-cut coloring, weighted treewidth,
//! planarity values, distance/degree indices, and adjacency spectra.

mod chrom;
mod cover_match;
mod domin;
mod error;
mod indep;
mod indices;
mod planar;
mod result;
mod spectrum;
mod treewidth;

pub use chrom::chromatic_number;
pub use cover_match::{matching_number, vertex_cover_number};
pub use domin::{domination_number, DominationVariant};
pub use error::ParamError;
pub use indep::independence_number;
pub use indices::{topological_index, IndexKind, IndexValue};
pub use planar::planarity_value;
pub use result::{LevelColoring, ParamResult, TreeDecomposition, Witness};
pub use spectrum::{spectrum_energy, Spectrum};
pub use treewidth::treewidth;

//! Persistence diagrams, persistence hierarchies and their dissimilarities
//! for scalar fields on chains and 2D grids.

pub mod analysis;
pub mod cli;
pub mod dissimilarity;
pub mod field;
pub mod filtration;
pub mod hierarchy;
pub mod io;
pub mod pipeline;
pub mod synth;
mod union_find;

pub use analysis::{ranks, vertex_stability, RankMap, StabilityMap};
pub use dissimilarity::{
    distance_matrix, tree_edit_distance, wasserstein, DistanceMatrix, Measure,
};
pub use field::{Connectivity, Domain, FieldError, ScalarField, VertexId};
pub use filtration::{compute_pairs, PersistenceDiagram, PersistencePair};
pub use hierarchy::{build_isph, build_regular_hierarchy, HierarchyVariant, PersistenceHierarchy};
pub use pipeline::{Analysis, Sweep};
pub use synth::{synth_case, SynthCase, SynthOptions};

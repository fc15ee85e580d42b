//! Dissimilarities between fields: tree edit distance on hierarchies, the
//! Wasserstein distance on diagrams, and pairwise distance matrices.

mod matrix;
mod ted;
mod wasserstein;

use thiserror::Error;

pub use matrix::{distance_matrix, DistanceMatrix, Measure};
pub use ted::tree_edit_distance;
pub use wasserstein::{min_cost_assignment, wasserstein};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DissimilarityError {
    #[error("hierarchy is empty")]
    EmptyHierarchy,
    #[error("hierarchy has {0} roots, expected one")]
    MultipleRoots(usize),
    #[error("Wasserstein exponent must be finite and >= 1, got {0}")]
    InvalidExponent(f64),
    #[error("need at least 2 fields, got {0}")]
    TooFewFields(usize),
    #[error("field {index} has a different domain kind than field 0")]
    MixedDomains { index: usize },
    #[error("field {index}: {source}")]
    Field {
        index: usize,
        #[source]
        source: Box<DissimilarityError>,
    },
}

use std::fmt::{self, Write as _};
use std::mem::discriminant;

use rayon::prelude::*;

use super::{tree_edit_distance, wasserstein, DissimilarityError};
use crate::field::ScalarField;
use crate::filtration::PersistenceDiagram;
use crate::hierarchy::{HierarchyVariant, PersistenceHierarchy};
use crate::pipeline::{Analysis, Sweep};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Measure {
    IsphTed,
    Wasserstein { q: f64 },
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::IsphTed => f.write_str("isph-ted"),
            Measure::Wasserstein { q } => write!(f, "wasserstein(q={q})"),
        }
    }
}

/// Symmetric `n x n` matrix with zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    /// Mean of the entries `(i, i + offset)`.
    pub fn minor_diagonal_mean(&self, offset: usize) -> Option<f64> {
        if offset >= self.n {
            return None;
        }
        let count = self.n - offset;
        let sum: f64 = (0..count).map(|i| self.get(i, i + offset)).sum();
        Some(sum / count as f64)
    }

    pub fn to_dense_tsv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| format!("{:?}", self.get(i, j)))
                .collect();
            let _ = writeln!(out, "{}", row.join("\t"));
        }
        out
    }

    /// `i j d` triplets for every cell.
    pub fn to_triplets_tsv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.n {
            for j in 0..self.n {
                let _ = writeln!(out, "{i}\t{j}\t{:?}", self.get(i, j));
            }
        }
        out
    }
}

enum Summary {
    Tree(PersistenceHierarchy),
    Diagram(PersistenceDiagram),
}

/// Pairwise distances between `fields`. Summaries are computed once per
/// field; the upper-triangle cells are evaluated in parallel.
pub fn distance_matrix(
    fields: &[ScalarField],
    measure: Measure,
    sweep: Sweep,
) -> Result<DistanceMatrix, DissimilarityError> {
    let n = fields.len();
    if n < 2 {
        return Err(DissimilarityError::TooFewFields(n));
    }
    let kind = discriminant(&fields[0].domain());
    if let Some(index) = fields
        .iter()
        .position(|f| discriminant(&f.domain()) != kind)
    {
        return Err(DissimilarityError::MixedDomains { index });
    }
    if let Measure::Wasserstein { q } = measure {
        if !(q.is_finite() && q >= 1.0) {
            return Err(DissimilarityError::InvalidExponent(q));
        }
    }

    let summaries: Vec<Summary> = fields
        .par_iter()
        .map(|f| {
            let a = Analysis::new(f, sweep);
            match measure {
                Measure::IsphTed => Summary::Tree(a.hierarchy(HierarchyVariant::Isph)),
                Measure::Wasserstein { .. } => Summary::Diagram(a.diagram()),
            }
        })
        .collect();

    // Surface single-field problems (e.g. a disconnected domain) with the index.
    if let Measure::IsphTed = measure {
        for (index, s) in summaries.iter().enumerate() {
            if let Summary::Tree(h) = s {
                if h.roots().len() != 1 {
                    return Err(DissimilarityError::Field {
                        index,
                        source: Box::new(DissimilarityError::MultipleRoots(h.roots().len())),
                    });
                }
            }
        }
    }

    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let values: Vec<f64> = cells
        .par_iter()
        .map(|&(i, j)| match (&summaries[i], &summaries[j], measure) {
            (Summary::Tree(a), Summary::Tree(b), _) => tree_edit_distance(a, b),
            (Summary::Diagram(a), Summary::Diagram(b), Measure::Wasserstein { q }) => {
                wasserstein(a, b, q)
            }
            _ => unreachable!("summaries match the measure"),
        })
        .collect::<Result<_, _>>()?;

    let mut entries = vec![0.0; n * n];
    for (&(i, j), &d) in cells.iter().zip(&values) {
        entries[i * n + j] = d;
        entries[j * n + i] = d;
    }
    Ok(DistanceMatrix { n, entries })
}

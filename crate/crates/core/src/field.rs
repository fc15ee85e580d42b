//! Scalar fields sampled on a chain or a regular grid, and the strict vertex
//! order every sweep in this crate relies on.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Index of a vertex in a [`ScalarField`].
pub type VertexId = usize;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FieldError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("degenerate domain: need at least 2 vertices, found {0}")]
    DegenerateDomain(usize),
    #[error("non-finite value at vertex {0}")]
    NonFinite(VertexId),
    #[error("grid of {rows}x{cols} needs {expected} values, found {found}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        expected: usize,
        found: usize,
    },
    #[error("invalid VTK file: {0}")]
    Format(String),
    #[error("unknown synthetic case `{0}`")]
    UnknownCase(String),
}

/// Neighborhood used for grid domains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Connectivity {
    /// von Neumann neighborhood.
    #[default]
    Four,
    /// Moore neighborhood (adds the diagonals).
    Eight,
}

impl FromStr for Connectivity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "4" => Ok(Connectivity::Four),
            "8" => Ok(Connectivity::Eight),
            other => Err(format!("connectivity must be 4 or 8, got `{other}`")),
        }
    }
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Connectivity::Four => f.write_str("4"),
            Connectivity::Eight => f.write_str("8"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// Vertex `i` is adjacent to `i - 1` and `i + 1`.
    Chain,
    /// Row-major grid, vertex id `row * cols + col`.
    Grid {
        rows: usize,
        cols: usize,
        connectivity: Connectivity,
    },
}

impl Domain {
    pub fn is_chain(&self) -> bool {
        matches!(self, Domain::Chain)
    }
}

/// Function values on a vertex set together with an undirected neighborhood
/// graph. Immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    values: Vec<f64>,
    neighbors: Vec<Vec<VertexId>>,
    domain: Domain,
}

impl ScalarField {
    pub fn chain(values: Vec<f64>) -> Result<Self, FieldError> {
        check_values(&values)?;
        let n = values.len();
        let neighbors = (0..n)
            .map(|i| {
                let mut adj = Vec::with_capacity(2);
                if i > 0 {
                    adj.push(i - 1);
                }
                if i + 1 < n {
                    adj.push(i + 1);
                }
                adj
            })
            .collect();
        Ok(ScalarField {
            values,
            neighbors,
            domain: Domain::Chain,
        })
    }

    pub fn grid(
        rows: usize,
        cols: usize,
        values: Vec<f64>,
        connectivity: Connectivity,
    ) -> Result<Self, FieldError> {
        let expected = rows * cols;
        if values.len() != expected {
            return Err(FieldError::ShapeMismatch {
                rows,
                cols,
                expected,
                found: values.len(),
            });
        }
        check_values(&values)?;
        Ok(ScalarField {
            neighbors: grid_neighbors(rows, cols, connectivity),
            values,
            domain: Domain::Grid {
                rows,
                cols,
                connectivity,
            },
        })
    }

    /// Same values, rebuilt adjacency. Chains are returned unchanged.
    pub fn with_connectivity(&self, connectivity: Connectivity) -> Self {
        match self.domain {
            Domain::Chain => self.clone(),
            Domain::Grid { rows, cols, .. } => ScalarField {
                values: self.values.clone(),
                neighbors: grid_neighbors(rows, cols, connectivity),
                domain: Domain::Grid {
                    rows,
                    cols,
                    connectivity,
                },
            },
        }
    }

    /// Same domain with new values; used for perturbations and affine maps.
    pub fn with_values(&self, values: Vec<f64>) -> Result<Self, FieldError> {
        if values.len() != self.values.len() {
            let (rows, cols) = self.dims().unwrap_or((1, self.values.len()));
            return Err(FieldError::ShapeMismatch {
                rows,
                cols,
                expected: self.values.len(),
                found: values.len(),
            });
        }
        check_values(&values)?;
        Ok(ScalarField {
            values,
            neighbors: self.neighbors.clone(),
            domain: self.domain,
        })
    }

    /// Applies `x -> g(x)` to every value.
    pub fn map_values(&self, g: impl Fn(f64) -> f64) -> Result<Self, FieldError> {
        self.with_values(self.values.iter().map(|&x| g(x)).collect())
    }

    /// `x -> -x`; sublevel sweeps of the result are superlevel sweeps of `self`.
    pub fn negate(&self) -> Self {
        ScalarField {
            values: self.values.iter().map(|&x| -x).collect(),
            neighbors: self.neighbors.clone(),
            domain: self.domain,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    #[inline]
    pub fn value(&self, v: VertexId) -> f64 {
        self.values[v]
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.neighbors[v]
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// `(rows, cols)` for grids.
    pub fn dims(&self) -> Option<(usize, usize)> {
        match self.domain {
            Domain::Chain => None,
            Domain::Grid { rows, cols, .. } => Some((rows, cols)),
        }
    }

    /// Compares two vertices under the symbolic perturbation `(f(v), v)`.
    #[inline]
    pub fn cmp_vertices(&self, a: VertexId, b: VertexId) -> Ordering {
        cmp_value(self.values[a], self.values[b]).then(a.cmp(&b))
    }

    #[inline]
    pub fn precedes(&self, a: VertexId, b: VertexId) -> bool {
        self.cmp_vertices(a, b) == Ordering::Less
    }

    /// Vertex with the largest value under the perturbed order.
    pub fn argmax(&self) -> VertexId {
        (0..self.len())
            .max_by(|&a, &b| self.cmp_vertices(a, b))
            .expect("field has at least two vertices")
    }
}

/// Total order on finite values that treats `-0.0` and `0.0` as equal.
#[inline]
pub(crate) fn cmp_value(a: f64, b: f64) -> Ordering {
    if a < b {
        Ordering::Less
    } else if a > b {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}

fn check_values(values: &[f64]) -> Result<(), FieldError> {
    if values.len() < 2 {
        return Err(FieldError::DegenerateDomain(values.len()));
    }
    match values.iter().position(|x| !x.is_finite()) {
        Some(v) => Err(FieldError::NonFinite(v)),
        None => Ok(()),
    }
}

fn grid_neighbors(rows: usize, cols: usize, connectivity: Connectivity) -> Vec<Vec<VertexId>> {
    const AXIS: [(isize, isize); 4] = [(-1, 0), (0, -1), (0, 1), (1, 0)];
    const DIAGONAL: [(isize, isize); 4] = [(-1, -1), (-1, 1), (1, -1), (1, 1)];
    let mut out = Vec::with_capacity(rows * cols);
    for r in 0..rows as isize {
        for c in 0..cols as isize {
            let offsets = AXIS.iter().chain(match connectivity {
                Connectivity::Four => [].iter(),
                Connectivity::Eight => DIAGONAL.iter(),
            });
            let mut adj: Vec<VertexId> = offsets
                .filter_map(|&(dr, dc)| {
                    let (nr, nc) = (r + dr, c + dc);
                    (nr >= 0 && nc >= 0 && nr < rows as isize && nc < cols as isize)
                        .then(|| nr as usize * cols + nc as usize)
                })
                .collect();
            adj.sort_unstable();
            out.push(adj);
        }
    }
    out
}

/// Ascending vertex permutation under `(f(v), v)` and its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrder {
    sorted: Vec<VertexId>,
    rank_of: Vec<usize>,
}

impl VertexOrder {
    pub fn sorted(&self) -> &[VertexId] {
        &self.sorted
    }

    /// Position of `v` in the ascending sweep.
    #[inline]
    pub fn rank(&self, v: VertexId) -> usize {
        self.rank_of[v]
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }
}

pub fn total_order(field: &ScalarField) -> VertexOrder {
    let mut sorted: Vec<VertexId> = (0..field.len()).collect();
    sorted.sort_by(|&a, &b| field.cmp_vertices(a, b));
    let mut rank_of = vec![0; sorted.len()];
    for (rank, &v) in sorted.iter().enumerate() {
        rank_of[v] = rank;
    }
    VertexOrder { sorted, rank_of }
}

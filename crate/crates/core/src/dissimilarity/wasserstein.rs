//! q-Wasserstein distance between persistence diagrams with L-infinity
//! ground metric, via an optimal assignment on the diagonal-augmented
//! bipartite graph.

use super::DissimilarityError;
use crate::filtration::{PersistenceDiagram, PersistencePair};

/// L-infinity distance from a point to its diagonal projection.
fn to_diagonal(p: &PersistencePair) -> f64 {
    p.persistence() / 2.0
}

pub fn wasserstein(
    a: &PersistenceDiagram,
    b: &PersistenceDiagram,
    q: f64,
) -> Result<f64, DissimilarityError> {
    if !(q.is_finite() && q >= 1.0) {
        return Err(DissimilarityError::InvalidExponent(q));
    }
    let (pa, pb) = (a.pairs(), b.pairs());
    let (n, m) = (pa.len(), pb.len());
    let size = n + m;
    if size == 0 {
        return Ok(0.0);
    }

    // Rows: points of `a`, then diagonal slots for `b`.
    // Columns: points of `b`, then diagonal slots for `a`.
    let mut cost = vec![vec![0.0f64; size]; size];
    for (i, p) in pa.iter().enumerate() {
        let diag = to_diagonal(p).powf(q);
        for (j, r) in pb.iter().enumerate() {
            cost[i][j] = p.linf(r).powf(q);
        }
        for c in &mut cost[i][m..] {
            *c = diag;
        }
    }
    for (j, r) in pb.iter().enumerate() {
        let diag = to_diagonal(r).powf(q);
        for row in &mut cost[n..] {
            row[j] = diag;
        }
    }

    let assignment = min_cost_assignment(&cost);
    let total: f64 = assignment
        .iter()
        .enumerate()
        .map(|(row, &col)| cost[row][col])
        .sum();
    Ok(total.powf(1.0 / q))
}

/// Hungarian method with row/column potentials, `O(n^3)`. Returns the column
/// assigned to each row of a square cost matrix.
pub fn min_cost_assignment(cost: &[Vec<f64>]) -> Vec<usize> {
    let n = cost.len();
    // 1-based indexing; column 0 is a virtual start column.
    let mut u = vec![0.0f64; n + 1];
    let mut v = vec![0.0f64; n + 1];
    let mut row_of = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];

    for i in 1..=n {
        row_of[0] = i;
        let mut j0 = 0;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = row_of[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let reduced = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if reduced < minv[j] {
                    minv[j] = reduced;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[row_of[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if row_of[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut col_of = vec![0usize; n];
    for j in 1..=n {
        col_of[row_of[j] - 1] = j - 1;
    }
    col_of
}

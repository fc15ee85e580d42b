//! Ordered tree edit distance between persistence hierarchies
//! (Zhang–Shasha keyroot dynamic program).
//!
//! Relabeling a pair costs the L-infinity distance between the two pairs,
//! deleting or inserting a pair costs its persistence. Children are ordered
//! canonically, so the result does not depend on node storage order. The two
//! roots are always mapped onto each other.

use super::DissimilarityError;
use crate::hierarchy::PersistenceHierarchy;

/// A hierarchy flattened in postorder for the dynamic program.
struct Postorder<'a> {
    h: &'a PersistenceHierarchy,
    /// Hierarchy node at each postorder position.
    node: Vec<usize>,
    /// Postorder position of the leftmost leaf below each position.
    leftmost: Vec<usize>,
    keyroots: Vec<usize>,
}

impl<'a> Postorder<'a> {
    fn new(h: &'a PersistenceHierarchy) -> Result<Self, DissimilarityError> {
        let roots = h.roots();
        match roots.len() {
            0 => return Err(DissimilarityError::EmptyHierarchy),
            1 => {}
            n => return Err(DissimilarityError::MultipleRoots(n)),
        }
        let children = h.children();
        let mut node = Vec::with_capacity(h.len());
        let mut leftmost = Vec::with_capacity(h.len());
        // (hierarchy node, next child to visit, postorder index of first leaf)
        let mut stack: Vec<(usize, usize, Option<usize>)> = vec![(roots[0], 0, None)];
        while let Some(top) = stack.last_mut() {
            let (v, next, first) = *top;
            if next < children[v].len() {
                top.1 += 1;
                stack.push((children[v][next], 0, None));
            } else {
                stack.pop();
                let pos = node.len();
                let lml = first.unwrap_or(pos);
                node.push(v);
                leftmost.push(lml);
                if let Some(parent) = stack.last_mut() {
                    if parent.2.is_none() {
                        parent.2 = Some(lml);
                    }
                }
            }
        }

        let n = node.len();
        let mut seen = vec![false; n];
        let mut keyroots = Vec::new();
        for i in (0..n).rev() {
            if !seen[leftmost[i]] {
                seen[leftmost[i]] = true;
                keyroots.push(i);
            }
        }
        keyroots.reverse();
        Ok(Postorder {
            h,
            node,
            leftmost,
            keyroots,
        })
    }

    fn len(&self) -> usize {
        self.node.len()
    }

    fn indel(&self, pos: usize) -> f64 {
        self.h.node(self.node[pos]).persistence()
    }
}

/// Minimum-cost edit mapping between two single-rooted hierarchies.
pub fn tree_edit_distance(
    a: &PersistenceHierarchy,
    b: &PersistenceHierarchy,
) -> Result<f64, DissimilarityError> {
    let ta = Postorder::new(a)?;
    let tb = Postorder::new(b)?;
    let (n, m) = (ta.len(), tb.len());
    let relabel = |i: usize, j: usize| a.node(ta.node[i]).linf(b.node(tb.node[j]));

    let mut tree = vec![vec![0.0f64; m]; n];
    let mut forest = vec![vec![0.0f64; m + 1]; n + 1];
    let mut children_forests = 0.0;

    for &i in &ta.keyroots {
        for &j in &tb.keyroots {
            let (li, lj) = (ta.leftmost[i], tb.leftmost[j]);
            let (rows, cols) = (i - li + 1, j - lj + 1);
            forest[0][0] = 0.0;
            for x in 1..=rows {
                forest[x][0] = forest[x - 1][0] + ta.indel(li + x - 1);
            }
            for y in 1..=cols {
                forest[0][y] = forest[0][y - 1] + tb.indel(lj + y - 1);
            }
            for x in 1..=rows {
                let i1 = li + x - 1;
                for y in 1..=cols {
                    let j1 = lj + y - 1;
                    let del = forest[x - 1][y] + ta.indel(i1);
                    let ins = forest[x][y - 1] + tb.indel(j1);
                    if ta.leftmost[i1] == li && tb.leftmost[j1] == lj {
                        let ren = forest[x - 1][y - 1] + relabel(i1, j1);
                        let d = del.min(ins).min(ren);
                        forest[x][y] = d;
                        tree[i1][j1] = d;
                    } else {
                        let sub = forest[ta.leftmost[i1] - li][tb.leftmost[j1] - lj] + tree[i1][j1];
                        forest[x][y] = del.min(ins).min(sub);
                    }
                }
            }
            if i == n - 1 && j == m - 1 {
                // Root keyroots have leftmost leaf 0: this is the distance
                // between the two forests of root children.
                children_forests = forest[rows - 1][cols - 1];
            }
        }
    }
    Ok(children_forests + relabel(n - 1, m - 1))
}

//! Ranks and stability values derived from a hierarchy.

use std::fmt::Write as _;

use crate::hierarchy::PersistenceHierarchy;

/// Number of descendants of every node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankMap(pub Vec<usize>);

impl RankMap {
    pub fn get(&self, node: usize) -> usize {
        self.0[node]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StabilityMap {
    /// Per node.
    pub nodes: Vec<f64>,
    /// `(parent, child, stab)` per edge.
    pub edges: Vec<(usize, usize, f64)>,
}

impl StabilityMap {
    pub fn get(&self, node: usize) -> f64 {
        self.nodes[node]
    }
}

/// Descendant counts, accumulated bottom-up over one depth-first traversal.
pub fn ranks(h: &PersistenceHierarchy) -> RankMap {
    let children = h.children();
    let mut rank = vec![0usize; h.len()];
    let mut stack: Vec<(usize, bool)> = h.roots().into_iter().map(|r| (r, false)).collect();
    while let Some((v, expanded)) = stack.pop() {
        if expanded {
            rank[v] = children[v].iter().map(|&c| 1 + rank[c]).sum();
        } else {
            stack.push((v, true));
            stack.extend(children[v].iter().map(|&c| (c, false)));
        }
    }
    RankMap(rank)
}

/// L-infinity distance between the pairs at both ends of an edge.
pub fn edge_stability(h: &PersistenceHierarchy, parent: usize, child: usize) -> f64 {
    h.node(parent).linf(h.node(child))
}

/// Per node: the minimum over its outgoing edge stabilities and its own
/// persistence (leaves get their persistence).
pub fn vertex_stability(h: &PersistenceHierarchy) -> StabilityMap {
    let mut nodes: Vec<f64> = h.nodes().iter().map(|p| p.persistence()).collect();
    let mut edges = Vec::with_capacity(h.len());
    for (p, c) in h.edges() {
        let s = edge_stability(h, p, c);
        edges.push((p, c, s));
        nodes[p] = nodes[p].min(s);
    }
    StabilityMap { nodes, edges }
}

/// `birth death rank stability essential`, tab separated, one line per node.
pub fn combined_table(h: &PersistenceHierarchy) -> String {
    let rank = ranks(h);
    let stab = vertex_stability(h);
    let mut out = String::new();
    for (i, p) in h.nodes().iter().enumerate() {
        let _ = writeln!(
            out,
            "{:?}\t{:?}\t{}\t{:?}\t{}",
            p.birth,
            p.death,
            rank.get(i),
            stab.get(i),
            u8::from(p.is_essential())
        );
    }
    out
}

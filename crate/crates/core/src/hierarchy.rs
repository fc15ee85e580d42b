//! Persistence hierarchies: trees whose nodes are persistence pairs.
//!
//! The regular hierarchy attaches every dying component to the pair of the
//! component it merges into, which is the merge tree read at pair level. The
//! interlevel set persistence hierarchy (ISPH) additionally tracks, for each
//! component, the highest minimum along its current branch. When two
//! components meet and at least one branch is non-trivial, the two stored
//! highest minima are tested for connectivity inside the interlevel set
//! between the lower of them and the merge value, using paths that stay in
//! the descending regions of those two minima. Connected branches are
//! prolonged; otherwise both branches close at the older generator.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::Serialize;

use crate::field::{cmp_value, ScalarField, VertexId};
use crate::filtration::{PairingTrace, PersistenceDiagram, PersistencePair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum HierarchyVariant {
    Regular,
    #[default]
    Isph,
}

impl FromStr for HierarchyVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "regular" => Ok(HierarchyVariant::Regular),
            "isph" => Ok(HierarchyVariant::Isph),
            other => Err(format!("unknown hierarchy variant `{other}`")),
        }
    }
}

impl fmt::Display for HierarchyVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HierarchyVariant::Regular => "regular",
            HierarchyVariant::Isph => "isph",
        })
    }
}

/// Rooted forest over the pairs of a diagram; one root per domain component.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PersistenceHierarchy {
    nodes: Vec<PersistencePair>,
    parent: Vec<Option<usize>>,
    variant: HierarchyVariant,
}

impl PersistenceHierarchy {
    /// Builds a hierarchy from explicit parent links. Returns `None` if the
    /// lengths differ, a link is out of range, or the links contain a cycle.
    pub fn from_parts(
        nodes: Vec<PersistencePair>,
        parent: Vec<Option<usize>>,
        variant: HierarchyVariant,
    ) -> Option<Self> {
        if nodes.len() != parent.len() || parent.iter().flatten().any(|&p| p >= nodes.len()) {
            return None;
        }
        let h = PersistenceHierarchy {
            nodes,
            parent,
            variant,
        };
        h.is_acyclic().then_some(h)
    }

    pub fn nodes(&self) -> &[PersistencePair] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &PersistencePair {
        &self.nodes[i]
    }

    pub fn parent(&self, i: usize) -> Option<usize> {
        self.parent[i]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn variant(&self) -> HierarchyVariant {
        self.variant
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.parent[i].is_none())
            .collect()
    }

    /// `(parent, child)` pairs.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(c, p)| p.map(|p| (p, c)))
    }

    /// Children of every node in canonical order: ascending birth, then
    /// death, then creator vertex.
    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut kids = vec![Vec::new(); self.len()];
        for (p, c) in self.edges() {
            kids[p].push(c);
        }
        for list in &mut kids {
            list.sort_by(|&a, &b| self.canonical_cmp(a, b));
        }
        kids
    }

    pub(crate) fn canonical_cmp(&self, a: usize, b: usize) -> Ordering {
        let (pa, pb) = (&self.nodes[a], &self.nodes[b]);
        cmp_value(pa.birth, pb.birth)
            .then(cmp_value(pa.death, pb.death))
            .then(pa.creator.cmp(&pb.creator))
    }

    /// Same links, every pair mapped through `x -> -x`.
    pub fn negated(&self) -> Self {
        PersistenceHierarchy {
            nodes: self.nodes.iter().map(PersistencePair::negated).collect(),
            parent: self.parent.clone(),
            variant: self.variant,
        }
    }

    fn is_acyclic(&self) -> bool {
        let n = self.len();
        (0..n).all(|start| {
            let mut cur = start;
            for _ in 0..=n {
                match self.parent[cur] {
                    None => return true,
                    Some(p) => cur = p,
                }
            }
            false
        })
    }

    /// Graphviz digraph with parent -> child edges and `(birth,death)` labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {} {{", self.variant);
        for (i, p) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"({:?},{:?})\"];", p.birth, p.death);
        }
        for (p, c) in self.edges() {
            let _ = writeln!(out, "  n{p} -> n{c};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("hierarchy serializes")
    }
}

/// Branch bookkeeping for one live component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BranchState {
    /// Lowest minimum of the component.
    pub generator: VertexId,
    /// Highest minimum along the component's current branch.
    pub highest: VertexId,
}

impl BranchState {
    pub fn new(generator: VertexId) -> Self {
        BranchState {
            generator,
            highest: generator,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.highest == self.generator
    }
}

fn node_indices(field_len: usize, diagram: &PersistenceDiagram) -> Vec<usize> {
    let mut node_of = vec![usize::MAX; field_len];
    for (i, p) in diagram.pairs().iter().enumerate() {
        node_of[p.creator] = i;
    }
    node_of
}

pub fn build_regular_hierarchy(
    trace: &PairingTrace,
    diagram: &PersistenceDiagram,
) -> PersistenceHierarchy {
    let n = trace.basins().len();
    let node_of = node_indices(n, diagram);
    let mut parent = vec![None; diagram.len()];
    for ev in trace.merges() {
        parent[node_of[ev.younger]] = Some(node_of[ev.older]);
    }
    PersistenceHierarchy {
        nodes: diagram.pairs().to_vec(),
        parent,
        variant: HierarchyVariant::Regular,
    }
}

/// Breadth-first search restricted to vertices accepted by `admit`.
struct RegionSearch {
    stamp: Vec<u32>,
    epoch: u32,
    queue: VecDeque<VertexId>,
}

impl RegionSearch {
    fn new(n: usize) -> Self {
        RegionSearch {
            stamp: vec![0; n],
            epoch: 0,
            queue: VecDeque::new(),
        }
    }

    fn connected(
        &mut self,
        field: &ScalarField,
        from: VertexId,
        to: VertexId,
        admit: impl Fn(VertexId) -> bool,
    ) -> bool {
        if from == to {
            return true;
        }
        if !admit(from) || !admit(to) {
            return false;
        }
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        self.queue.clear();
        self.stamp[from] = self.epoch;
        self.queue.push_back(from);
        while let Some(v) = self.queue.pop_front() {
            for &w in field.neighbors(v) {
                if self.stamp[w] == self.epoch || !admit(w) {
                    continue;
                }
                if w == to {
                    return true;
                }
                self.stamp[w] = self.epoch;
                self.queue.push_back(w);
            }
        }
        false
    }
}

/// Whether minima `a` and `b` are joined by a path through vertices with
/// `lower <= f(v) <= upper` that stays inside the descending regions of `a`
/// and `b`, i.e. never crosses a region assigned to a third minimum.
pub fn interlevel_connected(
    field: &ScalarField,
    trace: &PairingTrace,
    a: VertexId,
    b: VertexId,
    lower: f64,
    upper: f64,
) -> bool {
    let admit = |v: VertexId| {
        let f = field.value(v);
        let region = trace.basin(v);
        lower <= f && f <= upper && (region == a || region == b)
    };
    RegionSearch::new(field.len()).connected(field, a, b, admit)
}

/// Builds the interlevel set persistence hierarchy by replaying the merge
/// events of `trace`.
pub fn build_isph(
    field: &ScalarField,
    trace: &PairingTrace,
    diagram: &PersistenceDiagram,
) -> PersistenceHierarchy {
    let n = field.len();
    let node_of = node_indices(n, diagram);
    let mut parent = vec![None; diagram.len()];
    let mut branch: Vec<BranchState> = (0..n).map(BranchState::new).collect();
    let mut search = RegionSearch::new(n);

    for ev in trace.merges() {
        let older = branch[ev.older];
        let younger = branch[ev.younger];
        let child = node_of[ev.younger];

        if older.is_trivial() && younger.is_trivial() {
            parent[child] = Some(node_of[ev.older]);
            branch[ev.older].highest = ev.younger;
            continue;
        }

        let (h_old, h_young) = (older.highest, younger.highest);
        // The slab is bounded with the symbolic perturbation, so vertices
        // sharing a value with its ends are admitted exactly when they fall
        // between them in the sweep order.
        let lower = if field.precedes(h_old, h_young) {
            h_old
        } else {
            h_young
        };
        let upper = ev.vertex;
        let admit = |v: VertexId| {
            let region = trace.basin(v);
            (region == h_old || region == h_young)
                && field.cmp_vertices(lower, v) != Ordering::Greater
                && field.cmp_vertices(v, upper) != Ordering::Greater
        };
        if search.connected(field, h_old, h_young, admit) {
            parent[child] = Some(node_of[h_old]);
            branch[ev.older].highest = h_young;
        } else {
            parent[child] = Some(node_of[ev.older]);
            branch[ev.older].highest = ev.older;
        }
    }

    PersistenceHierarchy {
        nodes: diagram.pairs().to_vec(),
        parent,
        variant: HierarchyVariant::Isph,
    }
}

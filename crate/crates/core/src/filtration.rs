//! Sublevel set filtration of a scalar field: zero-dimensional persistence
//! pairs by the elder rule, plus the basin and merge bookkeeping that the
//! hierarchy builders replay.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::field::{ScalarField, VertexId, VertexOrder};
use crate::union_find::ElderUnionFind;

/// A creator/destroyer pair. Essential pairs have no destroyer and use the
/// maximum of their domain component as death.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PersistencePair {
    pub creator: VertexId,
    pub destroyer: Option<VertexId>,
    pub birth: f64,
    pub death: f64,
}

impl PersistencePair {
    pub fn is_essential(&self) -> bool {
        self.destroyer.is_none()
    }

    pub fn persistence(&self) -> f64 {
        persistence(self)
    }

    /// L-infinity distance between the two pairs as diagram points.
    pub fn linf(&self, other: &PersistencePair) -> f64 {
        (self.birth - other.birth)
            .abs()
            .max((self.death - other.death).abs())
    }

    /// The pair with both coordinates mapped through `x -> -x`.
    pub fn negated(&self) -> PersistencePair {
        PersistencePair {
            birth: -self.birth,
            death: -self.death,
            ..*self
        }
    }
}

pub fn persistence(pair: &PersistencePair) -> f64 {
    (pair.death - pair.birth).abs()
}

/// Multiset of pairs, ordered by creator in the sweep order.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct PersistenceDiagram {
    pairs: Vec<PersistencePair>,
}

impl PersistenceDiagram {
    pub fn from_pairs(pairs: Vec<PersistencePair>) -> Self {
        PersistenceDiagram { pairs }
    }

    pub fn pairs(&self) -> &[PersistencePair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn finite(&self) -> impl Iterator<Item = &PersistencePair> {
        self.pairs.iter().filter(|p| !p.is_essential())
    }

    pub fn essential(&self) -> impl Iterator<Item = &PersistencePair> {
        self.pairs.iter().filter(|p| p.is_essential())
    }

    /// Position of the pair created by each minimum.
    pub fn index_by_creator(&self) -> HashMap<VertexId, usize> {
        self.pairs
            .iter()
            .enumerate()
            .map(|(i, p)| (p.creator, i))
            .collect()
    }

    /// Maps every birth and death through `x -> -x`, turning the pairs of a
    /// negated field back into superlevel pairs of the original one.
    pub fn negated(&self) -> PersistenceDiagram {
        PersistenceDiagram {
            pairs: self.pairs.iter().map(PersistencePair::negated).collect(),
        }
    }

    /// `birth death creator destroyer essential`, tab separated.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for p in &self.pairs {
            let destroyer = p
                .destroyer
                .map_or_else(|| "-".to_string(), |d| d.to_string());
            let _ = writeln!(
                out,
                "{:?}\t{:?}\t{}\t{}\t{}",
                p.birth,
                p.death,
                p.creator,
                destroyer,
                u8::from(p.is_essential())
            );
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VertexClass {
    Minimum,
    Merge,
    Regular,
}

/// One binary merge: the component generated by `younger` dies at `vertex`
/// and is absorbed into the component generated by `older`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MergeEvent {
    pub vertex: VertexId,
    pub older: VertexId,
    pub younger: VertexId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingTrace {
    basin: Vec<VertexId>,
    class: Vec<VertexClass>,
    merges: Vec<MergeEvent>,
}

impl PairingTrace {
    /// The minimum whose descending region `v` belongs to: minima are their
    /// own basin, every other vertex inherits the basin of its lowest
    /// neighbor that precedes it in the sweep.
    #[inline]
    pub fn basin(&self, v: VertexId) -> VertexId {
        self.basin[v]
    }

    pub fn basins(&self) -> &[VertexId] {
        &self.basin
    }

    pub fn class(&self, v: VertexId) -> VertexClass {
        self.class[v]
    }

    /// Merge events in sweep order.
    pub fn merges(&self) -> &[MergeEvent] {
        &self.merges
    }

    pub fn minima(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.class
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == VertexClass::Minimum)
            .map(|(v, _)| v)
    }
}

/// Sweeps `field` in ascending `order`, pairing minima with the vertices at
/// which their components merge into older ones.
///
/// A vertex touching `k >= 2` components is split into `k - 1` binary merges,
/// absorbing the younger generators into the oldest one in ascending order.
pub fn compute_pairs(
    field: &ScalarField,
    order: &VertexOrder,
) -> (PersistenceDiagram, PairingTrace) {
    let n = field.len();
    debug_assert_eq!(order.len(), n);
    let mut uf = ElderUnionFind::new(n);
    let mut basin = vec![usize::MAX; n];
    let mut class = vec![VertexClass::Regular; n];
    let mut merges = Vec::new();
    let mut finite: HashMap<VertexId, VertexId> = HashMap::new();
    let mut roots: Vec<VertexId> = Vec::with_capacity(8);

    for (rank, &v) in order.sorted().iter().enumerate() {
        roots.clear();
        let mut steepest: Option<VertexId> = None;
        for &w in field.neighbors(v) {
            if order.rank(w) >= rank {
                continue;
            }
            if steepest.is_none_or(|s| order.rank(w) < order.rank(s)) {
                steepest = Some(w);
            }
            let r = uf.find(w);
            if !roots.contains(&r) {
                roots.push(r);
            }
        }

        match roots.len() {
            0 => {
                class[v] = VertexClass::Minimum;
                basin[v] = v;
            }
            1 => {
                basin[v] = basin[steepest.unwrap()];
                uf.attach(v, roots[0]);
            }
            _ => {
                class[v] = VertexClass::Merge;
                basin[v] = basin[steepest.unwrap()];
                roots.sort_by_key(|&r| order.rank(r));
                let oldest = roots[0];
                for &younger in &roots[1..] {
                    merges.push(MergeEvent {
                        vertex: v,
                        older: oldest,
                        younger,
                    });
                    finite.insert(younger, v);
                    uf.absorb(oldest, younger);
                }
                uf.attach(v, oldest);
            }
        }
    }

    // Essential pairs die at the maximum of their component.
    let mut top: HashMap<VertexId, VertexId> = HashMap::new();
    for &v in order.sorted() {
        let r = uf.find(v);
        top.insert(r, v);
    }

    let pairs = order
        .sorted()
        .iter()
        .filter(|&&v| class[v] == VertexClass::Minimum)
        .map(|&m| match finite.get(&m) {
            Some(&d) => PersistencePair {
                creator: m,
                destroyer: Some(d),
                birth: field.value(m),
                death: field.value(d),
            },
            None => PersistencePair {
                creator: m,
                destroyer: None,
                birth: field.value(m),
                death: field.value(top[&m]),
            },
        })
        .collect();

    (
        PersistenceDiagram { pairs },
        PairingTrace {
            basin,
            class,
            merges,
        },
    )
}

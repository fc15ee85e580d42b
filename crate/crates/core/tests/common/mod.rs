//! Independent brute-force reference implementations used by the
//! integration tests and the acceptance harness.

#![allow(dead_code, clippy::needless_range_loop, clippy::type_complexity)]

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};

use isph::field::{Connectivity, ScalarField};
use isph::filtration::{PersistenceDiagram, PersistencePair};
use isph::hierarchy::{HierarchyVariant, PersistenceHierarchy};
use rand::Rng;

/// `(creator, destroyer, birth, death)`.
pub type PairKey = (usize, Option<usize>, f64, f64);

pub fn keys(d: &PersistenceDiagram) -> Vec<PairKey> {
    let mut k: Vec<PairKey> = d
        .pairs()
        .iter()
        .map(|p| (p.creator, p.destroyer, p.birth, p.death))
        .collect();
    k.sort_by_key(|p| p.0);
    k
}

/// Vertices ascending by value, ties broken by index (`-0.0 == 0.0`).
pub fn sweep_order(values: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| {
        let (x, y) = (values[a] + 0.0, values[b] + 0.0);
        x.partial_cmp(&y).unwrap().then(a.cmp(&b))
    });
    idx
}

fn components(field: &ScalarField, active: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; field.len()];
    let mut out = Vec::new();
    for s in 0..field.len() {
        if !active[s] || seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &w in field.neighbors(v) {
                if active[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    q.push_back(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Zero-dimensional pairs by recomputing the components of every sublevel
/// set from scratch. A component is represented by its earliest vertex; a
/// representative dies when it stops being the earliest of its component.
pub fn brute_force_pairs(field: &ScalarField) -> Vec<PairKey> {
    let order = sweep_order(field.values());
    let mut rank = vec![0; field.len()];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    let mut active = vec![false; field.len()];
    let mut alive: BTreeSet<usize> = BTreeSet::new();
    let mut out = Vec::new();
    for &v in &order {
        active[v] = true;
        let mut oldest = BTreeSet::new();
        for comp in components(field, &active) {
            oldest.insert(*comp.iter().min_by_key(|&&u| rank[u]).unwrap());
        }
        for &m in alive.difference(&oldest) {
            out.push((m, Some(v), field.value(m), field.value(v)));
        }
        alive.retain(|m| oldest.contains(m));
        if oldest.contains(&v) {
            alive.insert(v);
        }
    }
    for comp in components(field, &active) {
        let m = *comp.iter().min_by_key(|&&u| rank[u]).unwrap();
        let top = comp
            .iter()
            .map(|&u| field.value(u))
            .fold(f64::NEG_INFINITY, f64::max);
        out.push((m, None, field.value(m), top));
    }
    out.sort_by_key(|p| p.0);
    out
}

pub fn random_chain(rng: &mut impl Rng, max_len: usize) -> ScalarField {
    let n = rng.gen_range(2..=max_len);
    ScalarField::chain(random_values(rng, n)).unwrap()
}

pub fn random_grid(rng: &mut impl Rng, max_side: usize) -> ScalarField {
    let rows = rng.gen_range(1..=max_side);
    let cols = rng.gen_range(if rows == 1 { 2 } else { 1 }..=max_side);
    ScalarField::grid(
        rows,
        cols,
        random_values(rng, rows * cols),
        Connectivity::Four,
    )
    .unwrap()
}

/// Half the fields draw from a small integer range so ties are common.
pub fn random_values(rng: &mut impl Rng, n: usize) -> Vec<f64> {
    if rng.gen_bool(0.5) {
        (0..n).map(|_| f64::from(rng.gen_range(0..6))).collect()
    } else {
        (0..n).map(|_| rng.gen_range(-10.0..10.0)).collect()
    }
}

/// Children sorted by (birth, death, creator).
pub fn ordered_children(h: &PersistenceHierarchy) -> Vec<Vec<usize>> {
    let mut kids = vec![Vec::new(); h.len()];
    for (i, p) in h.parents().iter().enumerate() {
        if let Some(p) = *p {
            kids[p].push(i);
        }
    }
    for list in &mut kids {
        list.sort_by(|&a, &b| {
            let (x, y) = (h.node(a), h.node(b));
            x.birth
                .partial_cmp(&y.birth)
                .unwrap_or(Ordering::Equal)
                .then(x.death.partial_cmp(&y.death).unwrap_or(Ordering::Equal))
                .then(x.creator.cmp(&y.creator))
        });
    }
    kids
}

/// `anc[a][b]`: `a` is a proper ancestor of `b`.
pub fn ancestor_matrix(h: &PersistenceHierarchy) -> Vec<Vec<bool>> {
    let n = h.len();
    let mut anc = vec![vec![false; n]; n];
    for (c, p) in h.parents().iter().enumerate() {
        if let Some(p) = *p {
            anc[p][c] = true;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if anc[i][k] && anc[k][j] {
                    anc[i][j] = true;
                }
            }
        }
    }
    anc
}

fn postorder_index(h: &PersistenceHierarchy) -> Vec<usize> {
    let kids = ordered_children(h);
    let root = h.roots()[0];
    let mut post = vec![0; h.len()];
    let mut counter = 0;
    fn visit(v: usize, kids: &[Vec<usize>], post: &mut [usize], counter: &mut usize) {
        for &c in &kids[v] {
            visit(c, kids, post, counter);
        }
        post[v] = *counter;
        *counter += 1;
    }
    visit(root, &kids, &mut post, &mut counter);
    post
}

fn linf(a: &PersistencePair, b: &PersistencePair) -> f64 {
    (a.birth - b.birth).abs().max((a.death - b.death).abs())
}

fn pers(p: &PersistencePair) -> f64 {
    (p.death - p.birth).abs()
}

/// Minimum-cost ordered edit mapping by enumerating every partial one-to-one
/// mapping that maps root to root and preserves ancestry and sibling order.
pub fn brute_force_ted(a: &PersistenceHierarchy, b: &PersistenceHierarchy) -> f64 {
    let (ra, rb) = (a.roots()[0], b.roots()[0]);
    let (anc_a, anc_b) = (ancestor_matrix(a), ancestor_matrix(b));
    let (post_a, post_b) = (postorder_index(a), postorder_index(b));

    let others_a: Vec<usize> = (0..a.len()).filter(|&v| v != ra).collect();
    let mut best = f64::INFINITY;
    let mut mapping = vec![(ra, rb)];
    let mut used_b = vec![false; b.len()];
    used_b[rb] = true;

    fn consistent(
        m: &[(usize, usize)],
        x: (usize, usize),
        anc: (&[Vec<bool>], &[Vec<bool>]),
        post: (&[usize], &[usize]),
    ) -> bool {
        m.iter().all(|&(p, q)| {
            anc.0[p][x.0] == anc.1[q][x.1]
                && anc.0[x.0][p] == anc.1[x.1][q]
                && (post.0[p] < post.0[x.0]) == (post.1[q] < post.1[x.1])
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        i: usize,
        others: &[usize],
        a: &PersistenceHierarchy,
        b: &PersistenceHierarchy,
        anc: (&[Vec<bool>], &[Vec<bool>]),
        post: (&[usize], &[usize]),
        mapping: &mut Vec<(usize, usize)>,
        used_b: &mut Vec<bool>,
        best: &mut f64,
    ) {
        if i == others.len() {
            let mut cost = 0.0;
            let mut mapped_a = vec![false; a.len()];
            for &(p, q) in mapping.iter() {
                cost += linf(a.node(p), b.node(q));
                mapped_a[p] = true;
            }
            for v in 0..a.len() {
                if !mapped_a[v] {
                    cost += pers(a.node(v));
                }
            }
            for w in 0..b.len() {
                if !used_b[w] {
                    cost += pers(b.node(w));
                }
            }
            if cost < *best {
                *best = cost;
            }
            return;
        }
        let v = others[i];
        search(i + 1, others, a, b, anc, post, mapping, used_b, best);
        for w in 0..b.len() {
            if used_b[w] || !consistent(mapping, (v, w), anc, post) {
                continue;
            }
            used_b[w] = true;
            mapping.push((v, w));
            search(i + 1, others, a, b, anc, post, mapping, used_b, best);
            mapping.pop();
            used_b[w] = false;
        }
    }

    search(
        0,
        &others_a,
        a,
        b,
        (&anc_a, &anc_b),
        (&post_a, &post_b),
        &mut mapping,
        &mut used_b,
        &mut best,
    );
    best
}

/// Diagonal distance of `(b, d)` under L-infinity, found by scanning the
/// diagonal at the midpoint and both endpoints.
fn diagonal_distance(p: &PersistencePair) -> f64 {
    let mid = (p.birth + p.death) / 2.0;
    [p.birth, mid, p.death]
        .iter()
        .map(|&t| (p.birth - t).abs().max((p.death - t).abs()))
        .fold(f64::INFINITY, f64::min)
}

/// q-Wasserstein distance by enumerating every partial matching.
pub fn brute_force_wasserstein(a: &[PersistencePair], b: &[PersistencePair], q: f64) -> f64 {
    fn go(
        i: usize,
        a: &[PersistencePair],
        b: &[PersistencePair],
        used: &mut [bool],
        q: f64,
    ) -> f64 {
        if i == a.len() {
            return b
                .iter()
                .zip(used.iter())
                .filter(|(_, &u)| !u)
                .map(|(p, _)| diagonal_distance(p).powf(q))
                .sum();
        }
        let mut best = diagonal_distance(&a[i]).powf(q) + go(i + 1, a, b, used, q);
        for j in 0..b.len() {
            if !used[j] {
                used[j] = true;
                best = best.min(linf(&a[i], &b[j]).powf(q) + go(i + 1, a, b, used, q));
                used[j] = false;
            }
        }
        best
    }
    go(0, a, b, &mut vec![false; b.len()], q).powf(1.0 / q)
}

pub fn random_diagram(rng: &mut impl Rng, max_points: usize) -> PersistenceDiagram {
    let n = rng.gen_range(0..=max_points);
    PersistenceDiagram::from_pairs(
        (0..n)
            .map(|i| {
                let birth = rng.gen_range(-5.0..5.0);
                PersistencePair {
                    creator: i,
                    destroyer: Some(100 + i),
                    birth,
                    death: birth + rng.gen_range(0.0..4.0),
                }
            })
            .collect(),
    )
}

/// Random rooted tree on `n` nodes with random pairs.
pub fn random_hierarchy(rng: &mut impl Rng, n: usize) -> PersistenceHierarchy {
    let nodes = (0..n)
        .map(|i| {
            let birth = f64::from(rng.gen_range(0..8)) / 2.0;
            PersistencePair {
                creator: i,
                destroyer: Some(100 + i),
                birth,
                death: birth + f64::from(rng.gen_range(0..8)) / 2.0,
            }
        })
        .collect();
    let parent = (0..n)
        .map(|i| (i > 0).then(|| rng.gen_range(0..i)))
        .collect();
    PersistenceHierarchy::from_parts(nodes, parent, HierarchyVariant::Isph).unwrap()
}

/// Descendant counts by transitive closure.
pub fn closure_ranks(h: &PersistenceHierarchy) -> Vec<usize> {
    ancestor_matrix(h)
        .iter()
        .map(|row| row.iter().filter(|&&x| x).count())
        .collect()
}

/// `min(pers(v), min over children c of linf(v, c))`.
pub fn direct_stability(h: &PersistenceHierarchy) -> Vec<f64> {
    (0..h.len())
        .map(|v| {
            (0..h.len())
                .filter(|&c| h.parent(c) == Some(v))
                .map(|c| linf(h.node(v), h.node(c)))
                .fold(pers(h.node(v)), f64::min)
        })
        .collect()
}

/// Basin of each vertex by walking to the lowest earlier neighbor until a
/// minimum is reached.
pub fn descent_basins(field: &ScalarField) -> Vec<usize> {
    let order = sweep_order(field.values());
    let mut rank = vec![0; field.len()];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    (0..field.len())
        .map(|mut v| loop {
            let next = field
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| rank[w] < rank[v])
                .min_by_key(|&w| rank[w]);
            match next {
                Some(w) => v = w,
                None => break v,
            }
        })
        .collect()
}

/// 1D slab connectivity: every vertex between `a` and `b` must lie in the
/// slab and belong to the basin of `a` or `b`.
pub fn interval_connected(field: &ScalarField, a: usize, b: usize, lower: f64, upper: f64) -> bool {
    let basins = descent_basins(field);
    let (lo, hi) = (a.min(b), a.max(b));
    (lo..=hi).all(|v| {
        let f = field.value(v);
        lower <= f && f <= upper && (basins[v] == a || basins[v] == b)
    })
}

/// Shape of a hierarchy as (node pair, parent pair), independent of node
/// storage order.
pub fn shape(h: &PersistenceHierarchy) -> Vec<((f64, f64), Option<(f64, f64)>)> {
    let mut s: Vec<_> = (0..h.len())
        .map(|i| {
            let p = h.node(i);
            (
                (p.birth, p.death),
                h.parent(i).map(|q| (h.node(q).birth, h.node(q).death)),
            )
        })
        .collect();
    s.sort_by(|x, y| x.partial_cmp(y).unwrap());
    s
}

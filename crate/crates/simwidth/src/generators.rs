//! Constructors for the graph families the toolkit studies: the two matching
//! patterns, column-clique and Hsu-clique chain grids, the split-graph
//! lower-bound family, subdivided grids and their circle-graph supergraphs,
//! and seeded random chordal / interval / permutation graphs.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Two size-t cliques joined by a perfect matching. Vertices `0..t` and
/// `t..2t`; vertex `i` is matched to `t + i`.
pub fn gen_ktkt(t: usize) -> Graph {
    assert!(t >= 1);
    let mut edges = clique_edges(0, t);
    edges.extend(clique_edges(t as VertexId, t));
    for i in 0..t as VertexId {
        edges.push((i, t as VertexId + i));
    }
    Graph::from_edges(2 * t, &edges).expect("pattern is simple")
}

/// A size-t clique and a size-t independent set joined by a perfect matching.
/// Clique on `0..t`; vertex `i` is matched to `t + i`.
pub fn gen_ktst(t: usize) -> Graph {
    assert!(t >= 1);
    let mut edges = clique_edges(0, t);
    for i in 0..t as VertexId {
        edges.push((i, t as VertexId + i));
    }
    Graph::from_edges(2 * t, &edges).expect("pattern is simple")
}

fn clique_edges(base: VertexId, size: usize) -> Vec<(VertexId, VertexId)> {
    let mut edges = Vec::new();
    for i in 0..size as VertexId {
        for j in i + 1..size as VertexId {
            edges.push((base + i, base + j));
        }
    }
    edges
}

/// Vertex id of the cell in row `i`, column `j` (1-based) with `p` rows,
/// numbered down each column in turn.
fn cell(p: usize, i: usize, j: usize) -> VertexId {
    ((j - 1) * p + (i - 1)) as VertexId
}

/// The p x q column-clique grid: each column is a clique and each row is a
/// path across consecutive columns. Also returns its column-major ordering,
/// which is a co-comparability ordering.
pub fn gen_column_clique_grid(p: usize, q: usize) -> (Graph, Vec<VertexId>) {
    assert!(p >= 1 && q >= 1);
    let mut edges = Vec::new();
    for j in 1..=q {
        for i1 in 1..=p {
            for i2 in i1 + 1..=p {
                edges.push((cell(p, i1, j), cell(p, i2, j)));
            }
        }
    }
    for i in 1..=p {
        for j in 1..q {
            edges.push((cell(p, i, j), cell(p, i, j + 1)));
        }
    }
    let g = Graph::from_edges(p * q, &edges).expect("grid is simple");
    let order = (0..(p * q) as VertexId).collect();
    (g, order)
}

/// The p x q Hsu-clique chain grid: each column is a clique, and a cell is
/// adjacent to a next-column cell exactly when its row index is at most the
/// other's.
pub fn gen_hsu_clique_chain(p: usize, q: usize) -> Graph {
    assert!(p >= 1 && q >= 1);
    let mut edges = Vec::new();
    for j in 1..=q {
        for i1 in 1..=p {
            for i2 in i1 + 1..=p {
                edges.push((cell(p, i1, j), cell(p, i2, j)));
            }
        }
    }
    for j in 1..q {
        for i1 in 1..=p {
            for i2 in i1..=p {
                edges.push((cell(p, i1, j), cell(p, i2, j + 1)));
            }
        }
    }
    Graph::from_edges(p * q, &edges).expect("grid is simple")
}

/// Split graph on a clique of size m and an independent set of size 2^m - 1
/// whose members carry the pairwise distinct nonempty clique neighborhoods,
/// by binary encoding. Clique on `0..m`.
pub fn gen_split_lowerbound(m: usize) -> Graph {
    assert!((2..=20).contains(&m));
    let mut edges = clique_edges(0, m);
    for k in 1..(1usize << m) {
        let s = (m + k - 1) as VertexId;
        for i in 0..m {
            if k >> i & 1 == 1 {
                edges.push((i as VertexId, s));
            }
        }
    }
    Graph::from_edges(m + (1 << m) - 1, &edges).expect("split graph is simple")
}

/// Vertex ids of the 1-subdivided k x k grid: grid vertices `a(i,j)` first in
/// row-major order, then the horizontal subdividers `h(i,j)`, then the
/// vertical subdividers `v(i,j)` (all 1-based).
pub struct SubdividedGridIds {
    pub k: usize,
}

impl SubdividedGridIds {
    pub fn a(&self, i: usize, j: usize) -> VertexId {
        ((i - 1) * self.k + (j - 1)) as VertexId
    }
    pub fn h(&self, i: usize, j: usize) -> VertexId {
        (self.k * self.k + (i - 1) * (self.k - 1) + (j - 1)) as VertexId
    }
    pub fn v(&self, i: usize, j: usize) -> VertexId {
        (self.k * self.k + self.k * (self.k - 1) + (i - 1) * self.k + (j - 1)) as VertexId
    }
    pub fn vertex_count(&self) -> usize {
        self.k * self.k + 2 * self.k * (self.k - 1)
    }
}

/// 1-subdivision of the k x k grid: every grid edge is replaced by a path of
/// length two through a fresh degree-2 vertex.
pub fn gen_grid_subdivision(k: usize) -> Graph {
    assert!(k >= 2);
    let ids = SubdividedGridIds { k };
    let mut edges = Vec::new();
    for i in 1..=k {
        for j in 1..k {
            edges.push((ids.a(i, j), ids.h(i, j)));
            edges.push((ids.h(i, j), ids.a(i, j + 1)));
        }
    }
    for i in 1..k {
        for j in 1..=k {
            edges.push((ids.a(i, j), ids.v(i, j)));
            edges.push((ids.v(i, j), ids.a(i + 1, j)));
        }
    }
    Graph::from_edges(ids.vertex_count(), &edges).expect("subdivision is simple")
}

/// Chords on a circle with `circle_points` positions in clockwise order,
/// one chord per vertex. Two vertices are adjacent in the derived graph
/// exactly when their chords interleave.
#[derive(Clone, Debug)]
pub struct ChordModel {
    pub circle_points: usize,
    pub chords: BTreeMap<VertexId, (usize, usize)>,
}

/// Intersection graph of a chord model.
pub fn circle_graph_from_chords(model: &ChordModel) -> Result<Graph> {
    let mut used = vec![false; model.circle_points + 1];
    for (&v, &(a, b)) in &model.chords {
        for p in [a, b] {
            if p == 0 || p > model.circle_points {
                return Err(Error::InvalidArgument(format!(
                    "chord of {v} endpoint {p} outside 1..={}",
                    model.circle_points
                )));
            }
            if used[p] {
                return Err(Error::InvalidArgument(format!("duplicate endpoint {p}")));
            }
            used[p] = true;
        }
        if a == b {
            return Err(Error::InvalidArgument(format!("degenerate chord of {v}")));
        }
    }
    let vertices: Vec<VertexId> = model.chords.keys().copied().collect();
    let mut edges = Vec::new();
    for (ix, &x) in vertices.iter().enumerate() {
        for &y in &vertices[ix + 1..] {
            if chords_interleave(model.chords[&x], model.chords[&y]) {
                edges.push((x, y));
            }
        }
    }
    Graph::with_ids(vertices, &edges)
}

fn chords_interleave(c1: (usize, usize), c2: (usize, usize)) -> bool {
    let (a, b) = (c1.0.min(c1.1), c1.0.max(c1.1));
    let inside = |p: usize| a < p && p < b;
    inside(c2.0) != inside(c2.1)
}

/// Triangle-free circle graph containing the 1-subdivided k x k grid as a
/// subgraph, from an explicit chord layout on 6k^2 circle points. Vertex ids
/// match `gen_grid_subdivision(k)`.
pub fn gen_circle_gk(k: usize) -> (Graph, ChordModel) {
    assert!(k >= 2);
    let ids = SubdividedGridIds { k };
    let mut chords = BTreeMap::new();
    for i in 1..=k {
        for j in 1..=k {
            let pts = if i % 2 == 1 {
                (6 * (i - 1) * k + 6 * j - 5, 6 * (i - 1) * k + 6 * j)
            } else {
                (6 * i * k - 6 * j + 1, 6 * i * k - 6 * j + 6)
            };
            chords.insert(ids.a(i, j), pts);
        }
    }
    for i in 1..=k {
        for j in 1..k {
            let pts = if i % 2 == 1 {
                (6 * (i - 1) * k + 6 * j - 1, 6 * (i - 1) * k + 6 * j + 2)
            } else {
                (6 * i * k - 6 * j + 2, 6 * i * k - 6 * j - 1)
            };
            chords.insert(ids.h(i, j), pts);
        }
    }
    for i in 1..k {
        for j in 1..=k {
            let pts = if i % 2 == 1 {
                (6 * (i - 1) * k + 6 * j - 2, 6 * i * k + 6 * (k - j) + 3)
            } else {
                (6 * i * k - 6 * j + 4, 6 * i * k + 6 * j - 3)
            };
            chords.insert(ids.v(i, j), pts);
        }
    }
    let model = ChordModel {
        circle_points: 6 * k * k,
        chords,
    };
    let g = circle_graph_from_chords(&model).expect("layout endpoints are distinct");
    (g, model)
}

/// Random chordal graph: a seeded random graph triangulated by the
/// elimination game along a random ordering.
pub fn gen_random_chordal(n: usize, density: f64, seed: u64) -> Graph {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj: Vec<BitSet> = vec![BitSet::new(n); n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density.clamp(0.0, 1.0)) {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut rank = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    for &v in &order {
        let later: Vec<usize> = adj[v].iter().filter(|&w| rank[w] > rank[v]).collect();
        for (ai, &x) in later.iter().enumerate() {
            for &y in &later[ai + 1..] {
                adj[x].insert(y);
                adj[y].insert(x);
            }
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in adj[u].iter() {
            if u < v {
                edges.push((u as VertexId, v as VertexId));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("fill-in keeps the graph simple")
}

/// Random interval graph from n intervals with distinct shuffled endpoints.
pub fn gen_random_interval(n: usize, seed: u64) -> Graph {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..2 * n).collect();
    points.shuffle(&mut rng);
    let intervals: Vec<(usize, usize)> = (0..n)
        .map(|i| {
            let (a, b) = (points[2 * i], points[2 * i + 1]);
            (a.min(b), a.max(b))
        })
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let (l1, r1) = intervals[u];
            let (l2, r2) = intervals[v];
            if l1 < r2 && l2 < r1 {
                edges.push((u as VertexId, v as VertexId));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("intersection graph is simple")
}

/// Random permutation graph: i ~ j iff the random permutation inverts the
/// pair. The identity ordering is a co-comparability ordering.
pub fn gen_random_permutation(n: usize, seed: u64) -> Graph {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if perm[i] > perm[j] {
                edges.push((i as VertexId, j as VertexId));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("permutation graph is simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    #[test]
    fn ktkt2_is_c4() {
        let g = gen_ktkt(2);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert!(g.vertex_ids().iter().all(|&v| g.degree(v).unwrap() == 2));
        assert!(!crate::chordality::chordality_check(&g).is_chordal());
    }

    #[test]
    fn ktst1_is_k2() {
        let g = gen_ktst(1);
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
    }

    #[test]
    fn ktst_structure() {
        let g = gen_ktst(3);
        for i in 0..3u32 {
            for j in 0..3u32 {
                assert_eq!(g.has_edge(i, 3 + j), i == j);
                assert_eq!(g.has_edge(3 + i, 3 + j), false);
                if i != j {
                    assert!(g.has_edge(i, j));
                }
            }
        }
    }

    #[test]
    fn column_grid_degenerate_shapes() {
        let (row, _) = gen_column_clique_grid(1, 5);
        assert_eq!(row, Graph::path(5));
        let (col, _) = gen_column_clique_grid(4, 1);
        assert_eq!(col, Graph::complete(4));
    }

    #[test]
    fn column_grid_4x4_adjacency_rules() {
        let (g, order) = gen_column_clique_grid(4, 4);
        assert_eq!(order.len(), 16);
        for i1 in 1..=4usize {
            for j1 in 1..=4usize {
                for i2 in 1..=4usize {
                    for j2 in 1..=4usize {
                        if (i1, j1) >= (i2, j2) {
                            continue;
                        }
                        let expected = (j1 == j2 && i1 != i2) || (i1 == i2 && j1.abs_diff(j2) == 1);
                        assert_eq!(
                            g.has_edge(cell(4, i1, j1), cell(4, i2, j2)),
                            expected,
                            "cells ({i1},{j1}) ({i2},{j2})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn hsu_degenerate_and_nesting() {
        let hsu_row = gen_hsu_clique_chain(1, 6);
        assert_eq!(hsu_row, Graph::path(6));
        // neighborhoods into the next column are nested by row index
        let g = gen_hsu_clique_chain(4, 5);
        for j in 1..5usize {
            for i1 in 1..=4usize {
                for i2 in i1 + 1..=4usize {
                    let next_of = |i: usize| -> VertexSet {
                        (1..=4)
                            .filter(|&r| g.has_edge(cell(4, i, j), cell(4, r, j + 1)))
                            .map(|r| cell(4, r, j + 1))
                            .collect()
                    };
                    assert!(next_of(i2).is_subset(&next_of(i1)));
                }
            }
        }
    }

    #[test]
    fn split_lowerbound_m2() {
        let g = gen_split_lowerbound(2);
        assert_eq!(g.vertex_count(), 5);
        let nbhd = |v: VertexId| -> VertexSet {
            g.neighbors(v)
                .unwrap()
                .into_iter()
                .filter(|&w| w < 2)
                .collect()
        };
        assert_eq!(nbhd(2), [0].into_iter().collect());
        assert_eq!(nbhd(3), [1].into_iter().collect());
        assert_eq!(nbhd(4), [0, 1].into_iter().collect());
    }

    #[test]
    fn split_lowerbound_m4_size() {
        assert_eq!(gen_split_lowerbound(4).vertex_count(), 19);
    }

    #[test]
    fn grid_subdivision_counts() {
        let g = gen_grid_subdivision(2);
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 8));
        let g3 = gen_grid_subdivision(3);
        let ids = SubdividedGridIds { k: 3 };
        for v in ids.a(1, 1) + 9..g3.vertex_count() as VertexId {
            assert_eq!(g3.degree(v).unwrap(), 2, "subdivider {v}");
        }
        assert!(crate::graph::is_d_degenerate(&g3, 2));
        assert!(!crate::graph::is_d_degenerate(&g3, 1));
    }

    #[test]
    fn circle_gk_counts_and_points() {
        for k in [2usize, 3, 4] {
            let (g, model) = gen_circle_gk(k);
            assert_eq!(g.vertex_count(), k * k + 2 * k * (k - 1));
            assert_eq!(model.circle_points, 6 * k * k);
            let mut seen = std::collections::BTreeSet::new();
            for &(a, b) in model.chords.values() {
                assert!((1..=model.circle_points).contains(&a));
                assert!((1..=model.circle_points).contains(&b));
                assert!(seen.insert(a) && seen.insert(b), "reused point");
            }
        }
    }

    #[test]
    fn circle_gk_contains_subdivided_grid() {
        for k in [2usize, 3] {
            let (g, _) = gen_circle_gk(k);
            let h = gen_grid_subdivision(k);
            for &(u, v) in h.edges() {
                assert!(g.has_edge(u, v), "k={k}: missing grid edge {u}-{v}");
            }
        }
    }

    #[test]
    fn circle_gk_extra_edges_follow_the_row_rule() {
        let k = 3;
        let (g, _) = gen_circle_gk(k);
        let h = gen_grid_subdivision(k);
        let ids = SubdividedGridIds { k };
        let mut extra: Vec<(VertexId, VertexId)> = g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| !h.has_edge(u, v))
            .collect();
        extra.sort_unstable();
        let mut expected = Vec::new();
        for i in 1..k - 1 {
            for j1 in 1..=k {
                for j2 in 1..=k {
                    let crosses = if i % 2 == 1 { j1 < j2 } else { j1 > j2 };
                    if crosses {
                        let (a, b) = (ids.v(i, j1), ids.v(i + 1, j2));
                        expected.push((a.min(b), a.max(b)));
                    }
                }
            }
        }
        expected.sort_unstable();
        assert_eq!(extra, expected);
    }

    #[test]
    fn chord_crossing_basics() {
        let nested = ChordModel {
            circle_points: 8,
            chords: BTreeMap::from([(0, (1, 6)), (1, (2, 5))]),
        };
        assert_eq!(circle_graph_from_chords(&nested).unwrap().edge_count(), 0);
        let crossing = ChordModel {
            circle_points: 8,
            chords: BTreeMap::from([(0, (1, 5)), (1, (3, 7))]),
        };
        assert_eq!(circle_graph_from_chords(&crossing).unwrap().edge_count(), 1);
        let dup = ChordModel {
            circle_points: 8,
            chords: BTreeMap::from([(0, (1, 5)), (1, (5, 7))]),
        };
        assert!(circle_graph_from_chords(&dup).is_err());
    }

    #[test]
    fn generators_are_deterministic() {
        for seed in [0u64, 7, 99] {
            assert_eq!(
                gen_random_chordal(12, 0.3, seed),
                gen_random_chordal(12, 0.3, seed)
            );
            assert_eq!(gen_random_interval(12, seed), gen_random_interval(12, seed));
            assert_eq!(
                gen_random_permutation(12, seed),
                gen_random_permutation(12, seed)
            );
        }
    }

    #[test]
    fn random_chordal_is_chordal() {
        for seed in 0..20u64 {
            let g = gen_random_chordal(10, 0.3, seed);
            assert!(crate::chordality::chordality_check(&g).is_chordal());
        }
    }

    #[test]
    fn random_interval_is_chordal_and_pattern_free() {
        for seed in 0..20u64 {
            let g = gen_random_interval(10, seed);
            assert!(crate::chordality::chordality_check(&g).is_chordal());
            assert!(crate::patterns::detect_ktst(&g, 3).unwrap().is_none());
        }
    }
}

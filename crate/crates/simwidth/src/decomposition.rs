//! Branch decompositions: subcubic trees with a bijection from graph vertices
//! to leaves, width evaluation, balanced-cut extraction, and the transform
//! that carries a decomposition across an edge contraction.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::Rng;

use crate::bitset::BitSet;
use crate::cut::{evaluate, Cut, CutFunctionKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

pub type NodeId = u32;

/// Normalized (min, max) tree edge.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TreeEdge(pub NodeId, pub NodeId);

impl TreeEdge {
    pub fn new(a: NodeId, b: NodeId) -> TreeEdge {
        TreeEdge(a.min(b), a.max(b))
    }
}

impl std::fmt::Display for TreeEdge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// An unrooted subcubic tree whose leaves biject to graph vertices. Node ids
/// are opaque and need not be contiguous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchDecomposition {
    adj: BTreeMap<NodeId, Vec<NodeId>>,
    leaf_of_vertex: BTreeMap<VertexId, NodeId>,
    vertex_of_leaf: BTreeMap<NodeId, VertexId>,
}

impl BranchDecomposition {
    pub fn new(
        tree_edges: &[(NodeId, NodeId)],
        leaf_map: BTreeMap<VertexId, NodeId>,
    ) -> Result<BranchDecomposition> {
        let mut adj: BTreeMap<NodeId, Vec<NodeId>> = BTreeMap::new();
        for &(x, y) in tree_edges {
            if x == y {
                return Err(Error::InvalidArgument("tree self-loop".into()));
            }
            adj.entry(x).or_default().push(y);
            adj.entry(y).or_default().push(x);
        }
        for leaf in leaf_map.values() {
            adj.entry(*leaf).or_default();
        }
        let nodes = adj.len();
        if nodes == 0 && !leaf_map.is_empty() {
            return Err(Error::InvalidArgument("empty tree with leaves".into()));
        }
        if nodes > 0 && tree_edges.len() != nodes - 1 {
            return Err(Error::InvalidArgument(format!(
                "not a tree: {} nodes, {} edges",
                nodes,
                tree_edges.len()
            )));
        }
        let d = BranchDecomposition {
            adj,
            vertex_of_leaf: leaf_map.iter().map(|(&v, &l)| (l, v)).collect(),
            leaf_of_vertex: leaf_map,
        };
        if d.vertex_of_leaf.len() != d.leaf_of_vertex.len() {
            return Err(Error::InvalidArgument("leaf map is not a bijection".into()));
        }
        // connectivity
        if nodes > 0 {
            let start = *d.adj.keys().next().unwrap();
            let mut seen = BTreeSet::from([start]);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &d.adj[&x] {
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            if seen.len() != nodes {
                return Err(Error::InvalidArgument("tree is disconnected".into()));
            }
        }
        // subcubic with every internal node of degree exactly 3; leaves are
        // exactly the mapped nodes
        for (&x, nbrs) in &d.adj {
            match nbrs.len() {
                0 => {
                    if nodes != 1 {
                        return Err(Error::InvalidArgument(format!("isolated node {x}")));
                    }
                    if !d.vertex_of_leaf.contains_key(&x) {
                        return Err(Error::InvalidArgument(format!("unmapped leaf {x}")));
                    }
                }
                1 => {
                    if !d.vertex_of_leaf.contains_key(&x) {
                        return Err(Error::InvalidArgument(format!("unmapped leaf {x}")));
                    }
                }
                3 => {
                    if d.vertex_of_leaf.contains_key(&x) {
                        return Err(Error::InvalidArgument(format!(
                            "internal node {x} is mapped to a vertex"
                        )));
                    }
                }
                deg => {
                    return Err(Error::InvalidArgument(format!(
                        "node {x} has degree {deg}; internal nodes must have degree 3"
                    )))
                }
            }
        }
        Ok(d)
    }

    /// Single-edge decomposition of a 2-vertex graph.
    pub fn single_edge(u: VertexId, v: VertexId) -> BranchDecomposition {
        BranchDecomposition::new(&[(0, 1)], BTreeMap::from([(u, 0), (v, 1)]))
            .expect("two leaves joined by an edge")
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_of_vertex.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.adj.keys().copied()
    }

    pub fn edges(&self) -> Vec<TreeEdge> {
        let mut out = Vec::new();
        for (&x, nbrs) in &self.adj {
            for &y in nbrs {
                if x < y {
                    out.push(TreeEdge(x, y));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn neighbors(&self, x: NodeId) -> &[NodeId] {
        self.adj.get(&x).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn degree(&self, x: NodeId) -> usize {
        self.neighbors(x).len()
    }

    pub fn leaf_for(&self, v: VertexId) -> Option<NodeId> {
        self.leaf_of_vertex.get(&v).copied()
    }

    pub fn vertex_at(&self, leaf: NodeId) -> Option<VertexId> {
        self.vertex_of_leaf.get(&leaf).copied()
    }

    pub fn leaf_map(&self) -> &BTreeMap<VertexId, NodeId> {
        &self.leaf_of_vertex
    }

    pub fn mapped_vertices(&self) -> VertexSet {
        self.leaf_of_vertex.keys().copied().collect()
    }

    /// True iff the tree is a caterpillar: no internal node has three
    /// internal neighbors, so the internal nodes form a path.
    pub fn is_linear(&self) -> bool {
        self.adj.values().all(|nbrs| {
            nbrs.len() < 3 || nbrs.iter().filter(|y| self.degree(**y) >= 2).count() <= 2
        })
    }

    /// Checks the decomposition covers exactly the graph's vertex set.
    pub fn validate_against(&self, g: &Graph) -> Result<()> {
        if self.mapped_vertices() != g.vertex_set() {
            return Err(Error::Mismatch(
                "decomposition leaves do not cover the graph's vertices".into(),
            ));
        }
        Ok(())
    }

    /// Graph vertices (as dense positions) mapped into the component of
    /// `keep` after deleting the edge `keep`-`drop`.
    pub fn side_positions(&self, g: &Graph, keep: NodeId, drop: NodeId) -> Result<BitSet> {
        let mut side = BitSet::new(g.vertex_count());
        let mut stack = vec![keep];
        let mut seen = BTreeSet::from([keep, drop]);
        while let Some(x) = stack.pop() {
            if let Some(&v) = self.vertex_of_leaf.get(&x) {
                side.insert(g.position(v)?);
            }
            for &y in &self.adj[&x] {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        Ok(side)
    }

    /// One cut per tree edge; the reported side is the component of the
    /// edge's smaller node id.
    pub fn cuts<'g>(&self, g: &'g Graph) -> Result<Vec<(TreeEdge, Cut<'g>)>> {
        self.validate_against(g)?;
        let mut out = Vec::new();
        for e in self.edges() {
            let side = self.side_positions(g, e.0, e.1)?;
            out.push((e, Cut::from_positions(g, side)?));
        }
        Ok(out)
    }
}

/// Per-edge cut values of a decomposition under one cut function.
#[derive(Clone, Debug)]
pub struct WidthReport {
    pub kind: CutFunctionKind,
    pub per_edge: Vec<(TreeEdge, usize)>,
    pub max: usize,
    pub argmax_edge: Option<TreeEdge>,
}

/// Evaluates `kind` on every cut of the decomposition.
pub fn f_width(g: &Graph, d: &BranchDecomposition, kind: CutFunctionKind) -> Result<WidthReport> {
    if g.vertex_count() <= 1 {
        return Ok(WidthReport {
            kind,
            per_edge: Vec::new(),
            max: 0,
            argmax_edge: None,
        });
    }
    let mut per_edge = Vec::new();
    let mut max = 0;
    let mut argmax_edge = None;
    for (e, cut) in d.cuts(g)? {
        let val = evaluate(kind, &cut);
        if argmax_edge.is_none() || val > max {
            max = val;
            argmax_edge = Some(e);
        }
        per_edge.push((e, val));
    }
    Ok(WidthReport {
        kind,
        per_edge,
        max,
        argmax_edge,
    })
}

/// A cut whose sides are roughly balanced, extracted by rooting the tree at a
/// subdivision point and walking to the deepest node that still carries more
/// than a third of the leaves.
///
/// The returned side holds more than `n/3` and at most `2n/3` vertices; the
/// complement holds at least `n/3` (strictly more unless the walk side hits
/// `2n/3` exactly, which requires `3 | n`).
pub fn balanced_cut<'g>(g: &'g Graph, d: &BranchDecomposition) -> Result<(TreeEdge, Cut<'g>)> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::Precondition(
            "balanced cut needs at least 3 vertices".into(),
        ));
    }
    d.validate_against(g)?;
    let pivot = *d.edges().first().expect("n >= 3 implies tree edges");

    // Root at a virtual subdivision point of `pivot`: children are the two
    // endpoints; compute depths and leaf counts for both halves.
    let mut parent: BTreeMap<NodeId, NodeId> = BTreeMap::new();
    let mut depth: BTreeMap<NodeId, usize> = BTreeMap::new();
    let mut order = Vec::new();
    for (start, other) in [(pivot.0, pivot.1), (pivot.1, pivot.0)] {
        depth.insert(start, 1);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in d.neighbors(x) {
                if y == other && x == start {
                    continue;
                }
                if !depth.contains_key(&y) {
                    depth.insert(y, depth[&x] + 1);
                    parent.insert(y, x);
                    queue.push_back(y);
                }
            }
        }
    }
    let mut leaves_below: BTreeMap<NodeId, usize> = BTreeMap::new();
    for &x in order.iter().rev() {
        let own = usize::from(d.vertex_at(x).is_some());
        let below: usize = d
            .neighbors(x)
            .iter()
            .filter(|y| parent.get(y) == Some(&x))
            .map(|y| leaves_below[y])
            .sum();
        leaves_below.insert(x, own + below);
    }

    // deepest node with more than n/3 leaves below; ties broken by node id
    let t = order
        .iter()
        .copied()
        .filter(|x| 3 * leaves_below[x] > n)
        .max_by_key(|x| (depth[x], std::cmp::Reverse(*x)))
        .expect("a root child carries at least half the leaves");
    let e = match parent.get(&t) {
        Some(&p) => TreeEdge::new(t, p),
        None => pivot, // t is a pivot endpoint; its parent is the virtual root
    };
    let other = if e.0 == t { e.1 } else { e.0 };
    let side = d.side_positions(g, t, other)?;
    debug_assert!(3 * side.len() > n && 3 * side.len() <= 2 * n);
    Ok((e, Cut::from_positions(g, side)?))
}

/// Result of carrying a decomposition across the contraction of `uv`: the
/// contracted graph, the minted vertex, and the new decomposition. When a
/// tree node was smoothed, `merged_edge` is the edge that replaced the pair
/// `merged_from`.
#[derive(Clone, Debug)]
pub struct ContractedDecomposition {
    pub graph: Graph,
    pub contracted_vertex: VertexId,
    pub decomposition: BranchDecomposition,
    pub merged_edge: Option<TreeEdge>,
    pub merged_from: Option<(TreeEdge, TreeEdge)>,
}

/// Transforms a decomposition of `g` into one of `g/uv` by deleting the leaf
/// of `v`, smoothing its neighbor, and mapping the contracted vertex to the
/// leaf of `u`. The sim-width never increases.
pub fn contract_decomposition(
    g: &Graph,
    d: &BranchDecomposition,
    u: VertexId,
    v: VertexId,
) -> Result<ContractedDecomposition> {
    if g.vertex_count() < 3 {
        return Err(Error::Precondition(
            "decomposition contraction needs at least 3 vertices".into(),
        ));
    }
    d.validate_against(g)?;
    let (g2, z) = g.contract_edge(u, v)?;
    let leaf_v = d.leaf_for(v).expect("validated cover");
    let leaf_u = d.leaf_for(u).expect("validated cover");
    let nb = d.neighbors(leaf_v)[0];
    let (x, y) = {
        let rest: Vec<NodeId> = d
            .neighbors(nb)
            .iter()
            .copied()
            .filter(|&w| w != leaf_v)
            .collect();
        (rest[0], rest[1])
    };
    let mut tree_edges: Vec<(NodeId, NodeId)> = d
        .edges()
        .into_iter()
        .filter(|e| e.0 != leaf_v && e.1 != leaf_v && e.0 != nb && e.1 != nb)
        .map(|e| (e.0, e.1))
        .collect();
    tree_edges.push((x, y));
    let mut leaf_map = d.leaf_map().clone();
    leaf_map.remove(&v);
    leaf_map.remove(&u);
    leaf_map.insert(z, leaf_u);
    let decomposition = BranchDecomposition::new(&tree_edges, leaf_map)?;
    Ok(ContractedDecomposition {
        graph: g2,
        contracted_vertex: z,
        decomposition,
        merged_edge: Some(TreeEdge::new(x, y)),
        merged_from: Some((TreeEdge::new(nb, x), TreeEdge::new(nb, y))),
    })
}

/// Caterpillar decomposition realizing a vertex ordering: the i-th spine cut
/// separates the first i vertices from the rest.
pub fn caterpillar_from_ordering(order: &[VertexId]) -> Result<BranchDecomposition> {
    let n = order.len();
    if n < 2 {
        return Err(Error::Precondition(
            "ordering needs at least 2 vertices".into(),
        ));
    }
    let distinct: BTreeSet<_> = order.iter().collect();
    if distinct.len() != n {
        return Err(Error::InvalidArgument("ordering repeats a vertex".into()));
    }
    if n == 2 {
        return Ok(BranchDecomposition::single_edge(order[0], order[1]));
    }
    // leaves 0..n-1 in order; spine nodes n..2n-3; the first two and last
    // two leaves share the end spine nodes
    let spine = |i: usize| (n + i) as NodeId;
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    for i in 0..n - 3 {
        edges.push((spine(i), spine(i + 1)));
    }
    edges.push((0, spine(0)));
    edges.push((1, spine(0)));
    for i in 2..n - 2 {
        edges.push((i as NodeId, spine(i - 1)));
    }
    if n > 3 {
        edges.push(((n - 2) as NodeId, spine(n - 3)));
    }
    edges.push(((n - 1) as NodeId, spine(n - 3)));
    let leaf_map = order
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as NodeId))
        .collect();
    BranchDecomposition::new(&edges, leaf_map)
}

/// Uniform-ish random decomposition by inserting leaves at random tree edges.
pub fn random_decomposition<R: Rng>(vertices: &[VertexId], rng: &mut R) -> BranchDecomposition {
    let n = vertices.len();
    assert!(n >= 2, "random decomposition needs at least 2 vertices");
    if n == 2 {
        return BranchDecomposition::single_edge(vertices[0], vertices[1]);
    }
    let mut edges: Vec<(NodeId, NodeId)> = vec![(0, 1)];
    let mut next_internal = n as NodeId;
    for leaf in 2..n as NodeId {
        let at = rng.gen_range(0..edges.len());
        let (a, b) = edges.swap_remove(at);
        let w = next_internal;
        next_internal += 1;
        edges.push((a, w));
        edges.push((w, b));
        edges.push((w, leaf));
    }
    let leaf_map = vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as NodeId))
        .collect();
    BranchDecomposition::new(&edges, leaf_map).expect("leaf insertion keeps the tree subcubic")
}

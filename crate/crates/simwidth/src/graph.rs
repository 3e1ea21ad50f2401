//! Simple undirected graphs with stable vertex identities and the editing
//! operations (deletion, contraction, smoothing) every other module builds on.

use std::collections::{BTreeMap, BTreeSet};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Stable, opaque vertex identifier. Identifiers survive deletions; edge
/// contraction mints a fresh identifier for the merged vertex.
pub type VertexId = u32;

/// A subset of a graph's vertices, by identifier.
pub type VertexSet = BTreeSet<VertexId>;

/// Immutable simple undirected graph. Every edit returns a new value.
#[derive(Clone)]
pub struct Graph {
    ids: Vec<VertexId>,
    pos: BTreeMap<VertexId, usize>,
    rows: Vec<BitSet>,
    edges: Vec<(VertexId, VertexId)>,
    next_id: VertexId,
}

impl Graph {
    /// Graph on vertices `0..n` with no edges.
    pub fn empty(n: usize) -> Graph {
        let ids: Vec<VertexId> = (0..n as VertexId).collect();
        Graph::with_ids(ids, &[]).expect("fresh ids are valid")
    }

    /// Graph with an explicit id set and edge list.
    pub fn with_ids(ids: Vec<VertexId>, edges: &[(VertexId, VertexId)]) -> Result<Graph> {
        let mut pos = BTreeMap::new();
        for (i, &v) in ids.iter().enumerate() {
            if pos.insert(v, i).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate vertex id {v}")));
            }
        }
        let n = ids.len();
        let mut rows = vec![BitSet::new(n); n];
        let mut edge_list = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            let (&pu, &pv) = match (pos.get(&u), pos.get(&v)) {
                (Some(a), Some(b)) => (a, b),
                _ => {
                    return Err(Error::UnknownVertex(if pos.contains_key(&u) {
                        v
                    } else {
                        u
                    }))
                }
            };
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at {u}")));
            }
            if rows[pu].contains(pv) {
                return Err(Error::InvalidArgument(format!("duplicate edge {u} {v}")));
            }
            rows[pu].insert(pv);
            rows[pv].insert(pu);
            edge_list.push((u.min(v), u.max(v)));
        }
        edge_list.sort_unstable();
        let next_id = ids.iter().copied().max().map_or(0, |m| m + 1);
        Ok(Graph {
            ids,
            pos,
            rows,
            edges: edge_list,
            next_id,
        })
    }

    /// Graph on vertices `0..n` with the given edges.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph> {
        Graph::with_ids((0..n as VertexId).collect(), edges)
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n as VertexId {
            for v in u + 1..n as VertexId {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("complete graph is simple")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n as VertexId).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n as VertexId).map(|v| (v - 1, v)).collect();
        edges.push((0, n as VertexId - 1));
        Graph::from_edges(n, &edges).expect("cycle is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertex identifiers in ascending insertion order.
    pub fn vertex_ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.ids.iter().copied().collect()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.pos.contains_key(&v)
    }

    /// Edges as `(min, max)` id pairs, sorted.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        match (self.pos.get(&u), self.pos.get(&v)) {
            (Some(&pu), Some(&pv)) => pu != pv && self.rows[pu].contains(pv),
            _ => false,
        }
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.row(self.position(v)?).len())
    }

    pub fn neighbors(&self, v: VertexId) -> Result<VertexSet> {
        let p = self.position(v)?;
        Ok(self.rows[p].iter().map(|q| self.ids[q]).collect())
    }

    /// Internal dense position of a vertex id.
    pub fn position(&self, v: VertexId) -> Result<usize> {
        self.pos.get(&v).copied().ok_or(Error::UnknownVertex(v))
    }

    pub fn id_at(&self, position: usize) -> VertexId {
        self.ids[position]
    }

    /// Adjacency row by dense position.
    pub fn row(&self, position: usize) -> &BitSet {
        &self.rows[position]
    }

    /// Converts an id set to a position bitset, validating membership.
    pub fn positions_of(&self, set: &VertexSet) -> Result<BitSet> {
        let mut b = BitSet::new(self.vertex_count());
        for &v in set {
            b.insert(self.position(v)?);
        }
        Ok(b)
    }

    pub fn ids_of(&self, positions: &BitSet) -> VertexSet {
        positions.iter().map(|p| self.ids[p]).collect()
    }

    /// The subgraph induced by `x`; vertex identifiers are preserved.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<Graph> {
        self.positions_of(x)?; // validates membership
        let ids: Vec<VertexId> = self.ids.iter().copied().filter(|v| x.contains(v)).collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| x.contains(&u) && x.contains(&v))
            .collect();
        let mut g = Graph::with_ids(ids, &edges)?;
        g.next_id = self.next_id;
        Ok(g)
    }

    pub fn delete_vertex(&self, v: VertexId) -> Result<Graph> {
        self.position(v)?;
        let mut x = self.vertex_set();
        x.remove(&v);
        self.induced_subgraph(&x)
    }

    /// Contracts the edge `uv`, replacing both ends by a fresh vertex whose
    /// neighborhood is `(N(u) ∪ N(v)) \ {u, v}`. Returns the new graph and
    /// the minted identifier.
    pub fn contract_edge(&self, u: VertexId, v: VertexId) -> Result<(Graph, VertexId)> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let z = self.next_id;
        let mut ids: Vec<VertexId> = self
            .ids
            .iter()
            .copied()
            .filter(|&w| w != u && w != v)
            .collect();
        ids.push(z);
        let mut merged: VertexSet = self.neighbors(u)?;
        merged.extend(self.neighbors(v)?);
        merged.remove(&u);
        merged.remove(&v);
        let mut edges: Vec<(VertexId, VertexId)> = self
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| a != u && a != v && b != u && b != v)
            .collect();
        for &w in &merged {
            edges.push((w.min(z), w.max(z)));
        }
        let mut g = Graph::with_ids(ids, &edges)?;
        g.next_id = z + 1;
        Ok((g, z))
    }

    /// Removes a degree-2 vertex whose two neighbors are non-adjacent, adding
    /// the edge between them.
    pub fn smooth_vertex(&self, v: VertexId) -> Result<Graph> {
        let nbrs = self.neighbors(v)?;
        if nbrs.len() != 2 {
            return Err(Error::Precondition(format!(
                "smoothing needs degree 2, vertex {v} has degree {}",
                nbrs.len()
            )));
        }
        let mut it = nbrs.iter();
        let (&a, &b) = (it.next().unwrap(), it.next().unwrap());
        if self.has_edge(a, b) {
            return Err(Error::Precondition(format!(
                "smoothing {v}: neighbors {a} and {b} are adjacent"
            )));
        }
        let ids: Vec<VertexId> = self.ids.iter().copied().filter(|&w| w != v).collect();
        let mut edges: Vec<(VertexId, VertexId)> = self
            .edges
            .iter()
            .copied()
            .filter(|&(x, y)| x != v && y != v)
            .collect();
        edges.push((a.min(b), a.max(b)));
        let mut g = Graph::with_ids(ids, &edges)?;
        g.next_id = self.next_id;
        Ok(g)
    }

    /// Connected components as id sets.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut seen = BitSet::new(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = BitSet::new(n);
            let mut stack = vec![start];
            seen.insert(start);
            comp.insert(start);
            while let Some(p) = stack.pop() {
                for q in self.rows[p].iter() {
                    if !seen.contains(q) {
                        seen.insert(q);
                        comp.insert(q);
                        stack.push(q);
                    }
                }
            }
            out.push(self.ids_of(&comp));
        }
        out
    }
}

/// True iff every subgraph has a vertex of degree at most `d`, checked by
/// greedy elimination.
pub fn is_d_degenerate(g: &Graph, d: usize) -> bool {
    let n = g.vertex_count();
    let mut alive = BitSet::full(n);
    let mut degree: Vec<usize> = (0..n).map(|p| g.row(p).len()).collect();
    for _ in 0..n {
        let Some(next) = alive.iter().find(|&p| degree[p] <= d) else {
            return false;
        };
        alive.remove(next);
        for q in g.row(next).iter() {
            if alive.contains(q) {
                degree[q] -= 1;
            }
        }
    }
    true
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.ids == other.ids && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, V={:?}, E={:?})",
            self.vertex_count(),
            self.edge_count(),
            self.ids,
            self.edges
        )
    }
}

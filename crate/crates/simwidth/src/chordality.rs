//! Chordal graph recognition by maximum cardinality search, with a perfect
//! elimination ordering on success and an induced long cycle on failure.

use crate::bitset::BitSet;
use crate::graph::{Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// A perfect elimination ordering: eliminating vertices in this order,
    /// every vertex is simplicial (its not-yet-eliminated neighbors form a
    /// clique) at the moment it is removed.
    Chordal(Vec<VertexId>),
    /// An induced cycle of length at least 4, in cycle order.
    WitnessCycle(Vec<VertexId>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

/// Recognizes chordal graphs.
pub fn chordality_check(g: &Graph) -> Chordality {
    let n = g.vertex_count();
    if n == 0 {
        return Chordality::Chordal(Vec::new());
    }
    let order = mcs_order(g);
    // reverse visit order is an elimination order iff the graph is chordal
    let peo: Vec<usize> = order.iter().rev().copied().collect();
    if let Some((v, x, y)) = elimination_defect(g, &peo) {
        let cycle = find_induced_cycle(g, v, x, y)
            .or_else(|| scan_for_induced_cycle(g))
            .expect("a failed elimination check implies a long induced cycle");
        return Chordality::WitnessCycle(cycle);
    }
    Chordality::Chordal(peo.into_iter().map(|p| g.id_at(p)).collect())
}

/// Maximum cardinality search visit order over dense positions.
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = BitSet::new(n);
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&p| !visited.contains(p))
            .max_by_key(|&p| (weight[p], std::cmp::Reverse(p)))
            .unwrap();
        visited.insert(next);
        order.push(next);
        for q in g.row(next).iter() {
            if !visited.contains(q) {
                weight[q] += 1;
            }
        }
    }
    order
}

/// First vertex of `peo` whose later neighbors are not a clique, together
/// with a non-adjacent later pair.
fn elimination_defect(g: &Graph, peo: &[usize]) -> Option<(usize, usize, usize)> {
    let n = g.vertex_count();
    let mut rank = vec![0usize; n];
    for (i, &p) in peo.iter().enumerate() {
        rank[p] = i;
    }
    for (i, &v) in peo.iter().enumerate() {
        let later: Vec<usize> = g.row(v).iter().filter(|&q| rank[q] > i).collect();
        for (ai, &x) in later.iter().enumerate() {
            for &y in &later[ai + 1..] {
                if !g.row(x).contains(y) {
                    return Some((v, x, y));
                }
            }
        }
    }
    None
}

/// Tries to close an induced cycle through the path x - v - y where x and y
/// are non-adjacent: a shortest x-y path avoiding v and N(v) \ {x, y} is
/// induced, and together with v it forms a chordless cycle of length >= 4.
fn find_induced_cycle(g: &Graph, v: usize, x: usize, y: usize) -> Option<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut blocked = g.row(v).clone();
    blocked.insert(v);
    blocked.remove(x);
    blocked.remove(y);
    // BFS from x to y in the allowed subgraph
    let mut parent = vec![usize::MAX; n];
    let mut seen = BitSet::new(n);
    seen.insert(x);
    let mut queue = std::collections::VecDeque::from([x]);
    while let Some(p) = queue.pop_front() {
        if p == y {
            let mut path = vec![y];
            let mut cur = y;
            while cur != x {
                cur = parent[cur];
                path.push(cur);
            }
            path.push(v);
            debug_assert!(path.len() >= 4);
            return Some(path.into_iter().map(|p| g.id_at(p)).collect());
        }
        for q in g.row(p).iter() {
            if !seen.contains(q) && !blocked.contains(q) {
                seen.insert(q);
                parent[q] = p;
                queue.push_back(q);
            }
        }
    }
    None
}

/// Fallback: scan all paths x - v - y with x, y non-adjacent.
fn scan_for_induced_cycle(g: &Graph) -> Option<Vec<VertexId>> {
    let n = g.vertex_count();
    for v in 0..n {
        let nbrs: Vec<usize> = g.row(v).iter().collect();
        for (ai, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[ai + 1..] {
                if !g.row(x).contains(y) {
                    if let Some(c) = find_induced_cycle(g, v, x, y) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

/// Independent assertion helper: eliminating along `order` always removes a
/// simplicial vertex.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[VertexId]) -> bool {
    if order.len() != g.vertex_count() {
        return false;
    }
    let mut rank = std::collections::HashMap::new();
    for (i, &v) in order.iter().enumerate() {
        if rank.insert(v, i).is_some() {
            return false;
        }
    }
    for (i, &v) in order.iter().enumerate() {
        let Ok(nbrs) = g.neighbors(v) else {
            return false;
        };
        let later: Vec<VertexId> = nbrs
            .into_iter()
            .filter(|w| rank.get(w).is_some_and(|&j| j > i))
            .collect();
        for (ai, &x) in later.iter().enumerate() {
            for &y in &later[ai + 1..] {
                if !g.has_edge(x, y) {
                    return false;
                }
            }
        }
    }
    true
}

/// Checks that `cycle` really is an induced cycle of length >= 4.
pub fn is_induced_long_cycle(g: &Graph, cycle: &[VertexId]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let distinct: std::collections::HashSet<_> = cycle.iter().collect();
    if distinct.len() != k {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

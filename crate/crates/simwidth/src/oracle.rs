//! Brute-force exact widths for tiny graphs: minimum f-width over all branch
//! decompositions (every unordered leaf-labeled subcubic tree is enumerated)
//! and over all linear decompositions (a subset dynamic program over vertex
//! orderings). The ground truth the rest of the crate is tested against.

use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::cut::{evaluate, Cut, CutFunctionKind};
use crate::decomposition::{BranchDecomposition, NodeId};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub const DEFAULT_MAX_N: usize = 9;
pub const DEFAULT_LINEAR_MAX_N: usize = 10;

/// Number of unordered leaf-labeled subcubic trees on n leaves: (2n-5)!!.
pub fn tree_count(n: usize) -> u128 {
    if n < 3 {
        return 1;
    }
    (0..=n - 3).map(|i| (2 * i + 1) as u128).product()
}

/// Memoized cut evaluation keyed by the canonical side bitmask.
struct CutMemo<'g> {
    g: &'g Graph,
    kind: CutFunctionKind,
    full: u64,
    memo: HashMap<u64, usize>,
}

impl<'g> CutMemo<'g> {
    fn new(g: &'g Graph, kind: CutFunctionKind) -> Self {
        let n = g.vertex_count();
        CutMemo {
            g,
            kind,
            full: if n == 64 { u64::MAX } else { (1 << n) - 1 },
            memo: HashMap::new(),
        }
    }

    fn value(&mut self, mask: u64) -> usize {
        debug_assert!(mask != 0 && mask != self.full);
        let key = mask.min(self.full & !mask);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let n = self.g.vertex_count();
        let side = BitSet::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1));
        let cut = Cut::from_positions(self.g, side).expect("proper nonempty side");
        let v = evaluate(self.kind, &cut);
        self.memo.insert(key, v);
        v
    }
}

/// Exact f-width: the minimum over all branch decompositions of the maximum
/// cut value, by full tree enumeration. Refuses graphs beyond `max_n`.
pub fn exact_width(
    g: &Graph,
    kind: CutFunctionKind,
    max_n: usize,
) -> Result<(usize, BranchDecomposition)> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::Precondition(
            "exact width needs at least 2 vertices".into(),
        ));
    }
    if n > max_n {
        return Err(Error::TooLarge(format!(
            "n = {n} exceeds max_n = {max_n}: {} decompositions would be enumerated",
            tree_count(n)
        )));
    }
    let mut memo = CutMemo::new(g, kind);
    let mut best: Option<(usize, Vec<(NodeId, NodeId)>)> = None;
    let mut edges: Vec<(NodeId, NodeId)> = vec![(0, 1)];
    enumerate_trees(&mut edges, 2, n, &mut |tree| {
        let bound = best.as_ref().map(|(v, _)| *v);
        if let Some(m) = tree_max(tree, n, &mut memo, bound) {
            if best.as_ref().is_none_or(|(v, _)| m < *v) {
                best = Some((m, tree.to_vec()));
            }
        }
    });
    let (value, tree) = best.expect("at least one decomposition exists");
    let leaf_map = g
        .vertex_ids()
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as NodeId))
        .collect();
    Ok((value, BranchDecomposition::new(&tree, leaf_map)?))
}

/// Inserts leaves 2..n in every possible position, visiting each unordered
/// tree exactly once.
fn enumerate_trees(
    edges: &mut Vec<(NodeId, NodeId)>,
    next_leaf: usize,
    n: usize,
    f: &mut impl FnMut(&[(NodeId, NodeId)]),
) {
    if next_leaf == n {
        f(edges);
        return;
    }
    let w = (n + next_leaf - 2) as NodeId;
    for idx in 0..edges.len() {
        let (a, b) = edges[idx];
        edges[idx] = (a, w);
        edges.push((w, b));
        edges.push((w, next_leaf as NodeId));
        enumerate_trees(edges, next_leaf + 1, n, f);
        edges.pop();
        edges.pop();
        edges[idx] = (a, b);
    }
}

/// Maximum cut value of a tree, or None once it reaches `abort_at`.
fn tree_max(
    tree: &[(NodeId, NodeId)],
    n: usize,
    memo: &mut CutMemo<'_>,
    abort_at: Option<usize>,
) -> Option<usize> {
    let nodes = if n == 2 { 2 } else { 2 * n - 2 };
    let mut adj: Vec<Vec<NodeId>> = vec![Vec::with_capacity(3); nodes];
    for &(x, y) in tree {
        adj[x as usize].push(y);
        adj[y as usize].push(x);
    }
    // root at leaf 0: each edge is (parent, child); the child subtree's leaf
    // mask is the cut side
    let mut mask = vec![0u64; nodes];
    let mut order: Vec<(NodeId, NodeId)> = Vec::with_capacity(nodes);
    let mut stack: Vec<(NodeId, NodeId)> = vec![(0, NodeId::MAX)];
    while let Some((x, parent)) = stack.pop() {
        order.push((x, parent));
        for &y in &adj[x as usize] {
            if y != parent {
                stack.push((y, x));
            }
        }
    }
    let mut max = 0usize;
    for &(x, parent) in order.iter().rev() {
        let mut m = if (x as usize) < n { 1u64 << x } else { 0 };
        for &y in &adj[x as usize] {
            if y != parent {
                m |= mask[y as usize];
            }
        }
        mask[x as usize] = m;
        if parent != NodeId::MAX {
            max = max.max(memo.value(m));
            if abort_at.is_some_and(|b| max >= b) {
                return None;
            }
        }
    }
    Some(max)
}

/// Exact linear f-width and an optimal ordering, via dynamic programming
/// over prefix vertex sets.
pub fn exact_linear_width(
    g: &Graph,
    kind: CutFunctionKind,
    max_n: usize,
) -> Result<(usize, Vec<VertexId>)> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::Precondition(
            "exact width needs at least 2 vertices".into(),
        ));
    }
    if n > max_n {
        let orderings: u128 = (1..=n as u128).product();
        return Err(Error::TooLarge(format!(
            "n = {n} exceeds max_n = {max_n}: {orderings} orderings would be searched"
        )));
    }
    let mut memo = CutMemo::new(g, kind);
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    // best[mask] = cheapest achievable maximum over the prefix cuts of an
    // ordering that places exactly `mask` first
    let mut best = vec![usize::MAX; (full + 1) as usize];
    best[0] = 0;
    for mask in 1u64..=full {
        let cut_here = if mask == full { 0 } else { memo.value(mask) };
        let mut value = usize::MAX;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as u64;
            rest &= rest - 1;
            value = value.min(best[(mask & !(1 << v)) as usize].max(cut_here));
        }
        best[mask as usize] = value;
    }
    // reconstruct an ordering, last vertex first
    let mut order_rev: Vec<VertexId> = Vec::with_capacity(n);
    let mut mask = full;
    while mask != 0 {
        let cut_here = if mask == full { 0 } else { memo.value(mask) };
        let target = best[mask as usize];
        let mut rest = mask;
        let mut chosen = None;
        while rest != 0 {
            let v = rest.trailing_zeros() as u64;
            rest &= rest - 1;
            if best[(mask & !(1 << v)) as usize].max(cut_here) == target {
                chosen = Some(v);
                break;
            }
        }
        let v = chosen.expect("dp table is consistent");
        order_rev.push(g.id_at(v as usize));
        mask &= !(1 << v);
    }
    order_rev.reverse();
    Ok((best[full as usize], order_rev))
}

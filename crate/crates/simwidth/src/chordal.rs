//! Clique trees of chordal graphs and the branch decomposition built from
//! them, whose every cut has a one-sided clique boundary. Such decompositions
//! have sim-width at most 1, and mim-width at most t-1 on graphs without an
//! induced clique-to-independent-set matching pattern of order t.

use std::collections::BTreeMap;

use crate::chordality::{chordality_check, Chordality};
use crate::cut::Cut;
use crate::decomposition::{BranchDecomposition, NodeId};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

/// A tree over the maximal cliques of a chordal graph in which, for every
/// vertex, the bags containing it induce a subtree.
#[derive(Clone, Debug)]
pub struct CliqueTree {
    pub bags: Vec<VertexSet>,
    pub adj: Vec<Vec<usize>>,
}

impl CliqueTree {
    pub fn bag_count(&self) -> usize {
        self.bags.len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, nbrs) in self.adj.iter().enumerate() {
            for &j in nbrs {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Builds a clique tree: maximal cliques from a perfect elimination ordering,
/// joined by a maximum-weight spanning tree on bag-intersection sizes.
pub fn clique_tree(g: &Graph) -> Result<CliqueTree> {
    let peo = match chordality_check(g) {
        Chordality::Chordal(peo) => peo,
        Chordality::WitnessCycle(c) => return Err(Error::NotChordal(c)),
    };
    if g.vertex_count() == 0 {
        return Ok(CliqueTree {
            bags: Vec::new(),
            adj: Vec::new(),
        });
    }
    let mut rank: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (i, &v) in peo.iter().enumerate() {
        rank.insert(v, i);
    }
    // candidate cliques: each vertex with its later neighbors
    let mut candidates: Vec<VertexSet> = Vec::new();
    for (i, &v) in peo.iter().enumerate() {
        let mut c: VertexSet = g
            .neighbors(v)?
            .into_iter()
            .filter(|w| rank[w] > i)
            .collect();
        c.insert(v);
        candidates.push(c);
    }
    let bags: Vec<VertexSet> = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|other| other.len() > c.len() && c.is_subset(other))
        })
        .cloned()
        .collect();

    // maximum-weight spanning tree over intersection sizes; zero-weight pairs
    // still connect clique trees of different components
    let k = bags.len();
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            pairs.push((bags[i].intersection(&bags[j]).count(), i, j));
        }
    }
    pairs.sort_by_key(|&(w, i, j)| (std::cmp::Reverse(w), i, j));
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    let mut adj = vec![Vec::new(); k];
    for (_, i, j) in pairs {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri != rj {
            parent[ri] = rj;
            adj[i].push(j);
            adj[j].push(i);
        }
    }
    let ct = CliqueTree { bags, adj };
    validate_clique_tree(g, &ct)?;
    Ok(ct)
}

/// Independently checks the three clique-tree conditions: bags are maximal
/// cliques covering all edges, and each vertex's bags induce a subtree.
pub fn validate_clique_tree(g: &Graph, ct: &CliqueTree) -> Result<()> {
    let fail = |msg: String| Err(Error::InvalidArgument(msg));
    if ct.bag_count() > g.vertex_count().max(1) {
        return fail("more bags than vertices".into());
    }
    for bag in &ct.bags {
        let members: Vec<VertexId> = bag.iter().copied().collect();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                if !g.has_edge(x, y) {
                    return fail(format!("bag not a clique: {x} {y}"));
                }
            }
        }
        for &w in g.vertex_ids() {
            if !bag.contains(&w) && members.iter().all(|&x| g.has_edge(x, w)) {
                return fail(format!("bag not maximal: can add {w}"));
            }
        }
    }
    for &(u, v) in g.edges() {
        if !ct.bags.iter().any(|b| b.contains(&u) && b.contains(&v)) {
            return fail(format!("edge {u} {v} in no bag"));
        }
    }
    for &v in g.vertex_ids() {
        let holders: Vec<usize> = (0..ct.bag_count())
            .filter(|&i| ct.bags[i].contains(&v))
            .collect();
        if holders.is_empty() {
            return fail(format!("vertex {v} in no bag"));
        }
        let mut seen = vec![false; ct.bag_count()];
        let mut stack = vec![holders[0]];
        seen[holders[0]] = true;
        let mut reached = 0;
        while let Some(i) = stack.pop() {
            reached += 1;
            for &j in &ct.adj[i] {
                if !seen[j] && ct.bags[j].contains(&v) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        if reached != holders.len() {
            return fail(format!("bags of vertex {v} not connected"));
        }
    }
    Ok(())
}

/// Branch decomposition of a chordal graph via its clique tree: root the
/// clique tree, hang one leaf per vertex off a subdivided path into each
/// bag's parent edge, replace bag nodes by paths to restore degree 3, then
/// smooth. Every cut of the result has a clique on one boundary.
pub fn chordal_branch_decomposition(g: &Graph) -> Result<BranchDecomposition> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidArgument("empty graph".into()));
    }
    if n == 1 {
        let v = g.vertex_ids()[0];
        return BranchDecomposition::new(&[], BTreeMap::from([(v, 0)]));
    }
    let ct = clique_tree(g)?;
    let k = ct.bag_count();

    // root the clique tree at bag 0
    let root = 0usize;
    let mut parent = vec![usize::MAX; k];
    let mut bfs_order = vec![root];
    let mut seen = vec![false; k];
    seen[root] = true;
    let mut head = 0;
    while head < bfs_order.len() {
        let t = bfs_order[head];
        head += 1;
        let mut kids: Vec<usize> = ct.adj[t].iter().copied().filter(|&c| !seen[c]).collect();
        kids.sort_unstable();
        for c in kids {
            seen[c] = true;
            parent[c] = t;
            bfs_order.push(c);
        }
    }

    // fresh node ids: one anchor per bag, then subdivision and leaf nodes
    let mut next: NodeId = k as NodeId;
    let mut alloc = || {
        let id = next;
        next += 1;
        id
    };
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    let mut leaf_map: BTreeMap<VertexId, NodeId> = BTreeMap::new();
    // per bag: the subdivision path bottom (tied to the bag anchor) and top
    let mut path_bottom = vec![None; k];
    let mut path_top = vec![None; k];
    for &t in &bfs_order {
        let fresh: Vec<VertexId> = match parent[t] {
            usize::MAX => ct.bags[t].iter().copied().collect(),
            p => ct.bags[t].difference(&ct.bags[p]).copied().collect(),
        };
        // distinct maximal cliques always add a vertex over the parent; an
        // empty difference would simply leave the parent edge unsubdivided
        let mut prev: Option<NodeId> = None;
        for &v in &fresh {
            let sub = alloc();
            let leaf = alloc();
            edges.push((sub, leaf));
            leaf_map.insert(v, leaf);
            if let Some(q) = prev {
                edges.push((q, sub));
            } else {
                path_bottom[t] = Some(sub);
            }
            prev = Some(sub);
        }
        path_top[t] = prev;
    }

    // degree-3 transform: replace each bag anchor by a path over its children
    for &t in &bfs_order {
        let kids: Vec<usize> = (0..k).filter(|&c| parent[c] == t).collect();
        if kids.is_empty() {
            continue;
        }
        let ws: Vec<NodeId> = kids.iter().map(|_| alloc()).collect();
        for pair in ws.windows(2) {
            edges.push((pair[0], pair[1]));
        }
        if let Some(b) = path_bottom[t] {
            edges.push((ws[0], b));
        }
        for (i, &c) in kids.iter().enumerate() {
            // the child's path top connects to this bag; an unsubdivided
            // child edge would attach the child's own w-path instead, which
            // cannot happen for distinct maximal cliques
            let top = path_top[c].expect("maximal cliques add at least one vertex");
            edges.push((ws[i], top));
        }
    }

    smooth_tree(&mut edges);
    BranchDecomposition::new(&edges, leaf_map)
}

/// Repeatedly smooths degree-2 nodes in an edge list of a tree.
fn smooth_tree(edges: &mut Vec<(NodeId, NodeId)>) {
    loop {
        let mut nbrs_of: BTreeMap<NodeId, Vec<NodeId>> = BTreeMap::new();
        for &(x, y) in edges.iter() {
            nbrs_of.entry(x).or_default().push(y);
            nbrs_of.entry(y).or_default().push(x);
        }
        let Some((&node, nbrs)) = nbrs_of.iter().find(|(_, nbrs)| nbrs.len() == 2) else {
            return;
        };
        let (a, b) = (nbrs[0], nbrs[1]);
        edges.retain(|&(x, y)| x != node && y != node);
        edges.push((a.min(b), a.max(b)));
    }
}

/// Which boundary of the cut is a clique.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CliqueBoundary {
    /// N(B) ∩ A is a clique.
    InA,
    /// N(A) ∩ B is a clique.
    InB,
    Both,
}

/// Reports whether the neighborhood of either side within the other is a
/// clique; `None` when neither boundary is one.
pub fn one_sided_clique_certificate(g: &Graph, cut: &Cut<'_>) -> Option<CliqueBoundary> {
    let a = cut.side_a();
    let b = a.complement();
    let boundary_clique = |side: &crate::bitset::BitSet, other: &crate::bitset::BitSet| {
        let boundary: Vec<usize> = side
            .iter()
            .filter(|&p| g.row(p).intersects(other))
            .collect();
        boundary
            .iter()
            .enumerate()
            .all(|(i, &x)| boundary[i + 1..].iter().all(|&y| g.row(x).contains(y)))
    };
    let in_a = boundary_clique(a, &b);
    let in_b = boundary_clique(&b, a);
    match (in_a, in_b) {
        (true, true) => Some(CliqueBoundary::Both),
        (true, false) => Some(CliqueBoundary::InA),
        (false, true) => Some(CliqueBoundary::InB),
        (false, false) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cut::CutFunctionKind;
    use crate::decomposition::f_width;
    use crate::generators;

    #[test]
    fn clique_tree_of_complete_graph() {
        let g = Graph::complete(4);
        let ct = clique_tree(&g).unwrap();
        assert_eq!(ct.bag_count(), 1);
        assert_eq!(ct.bags[0], g.vertex_set());
    }

    #[test]
    fn clique_tree_of_tree_has_edge_bags() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let ct = clique_tree(&g).unwrap();
        assert_eq!(ct.bag_count(), 4);
        assert!(ct.bags.iter().all(|b| b.len() == 2));
        validate_clique_tree(&g, &ct).unwrap();
    }

    #[test]
    fn clique_tree_rejects_non_chordal() {
        match clique_tree(&Graph::cycle(5)) {
            Err(Error::NotChordal(c)) => assert_eq!(c.len(), 5),
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn clique_tree_of_hsu_grid() {
        let g = generators::gen_hsu_clique_chain(3, 3);
        let ct = clique_tree(&g).unwrap();
        validate_clique_tree(&g, &ct).unwrap();
    }

    #[test]
    fn decomposition_of_k2() {
        let g = Graph::complete(2);
        let d = chordal_branch_decomposition(&g).unwrap();
        assert_eq!(d.node_count(), 2);
        assert_eq!(d.leaf_count(), 2);
    }

    #[test]
    fn random_chordal_sim_width_at_most_1() {
        for seed in 0..25u64 {
            let g = generators::gen_random_chordal(4 + (seed as usize % 14), 0.4, seed);
            let d = chordal_branch_decomposition(&g).unwrap();
            let report = f_width(&g, &d, CutFunctionKind::Sim).unwrap();
            assert!(report.max <= 1, "seed {seed}: sim-width {}", report.max);
        }
    }

    #[test]
    fn random_interval_mim_width_at_most_2() {
        for seed in 0..25u64 {
            let g = generators::gen_random_interval(4 + (seed as usize % 14), seed);
            assert!(crate::patterns::detect_ktst(&g, 3).unwrap().is_none());
            let d = chordal_branch_decomposition(&g).unwrap();
            let report = f_width(&g, &d, CutFunctionKind::Mim).unwrap();
            assert!(report.max <= 2, "seed {seed}: mim-width {}", report.max);
        }
    }

    #[test]
    fn ktst_free_chordal_mim_bound_by_pattern_order() {
        for seed in 0..15u64 {
            let g = generators::gen_random_chordal(4 + (seed as usize % 12), 0.5, seed);
            let d = chordal_branch_decomposition(&g).unwrap();
            let mim = f_width(&g, &d, CutFunctionKind::Mim).unwrap().max;
            for t in 2..=4usize {
                if crate::patterns::detect_ktst(&g, t).unwrap().is_none() {
                    assert!(mim <= t - 1, "seed {seed} t={t} mim={mim}");
                }
            }
        }
    }

    #[test]
    fn certificate_on_constructed_cuts() {
        for seed in 0..10u64 {
            let g = generators::gen_random_chordal(4 + (seed as usize % 10), 0.4, seed);
            let d = chordal_branch_decomposition(&g).unwrap();
            for (_, cut) in d.cuts(&g).unwrap() {
                assert!(one_sided_clique_certificate(&g, &cut).is_some());
            }
        }
    }

    #[test]
    fn certificate_failure_on_c4_opposite_cut() {
        let g = Graph::cycle(4);
        let side: VertexSet = [0, 2].into_iter().collect();
        let cut = Cut::new(&g, &side).unwrap();
        assert_eq!(one_sided_clique_certificate(&g, &cut), None);
    }

    #[test]
    fn certificate_both_sides_on_clique() {
        let g = Graph::complete(5);
        let side: VertexSet = [0, 1].into_iter().collect();
        let cut = Cut::new(&g, &side).unwrap();
        assert_eq!(
            one_sided_clique_certificate(&g, &cut),
            Some(CliqueBoundary::Both)
        );
    }

    #[test]
    fn disconnected_chordal_graphs_decompose() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let d = chordal_branch_decomposition(&g).unwrap();
        assert_eq!(d.leaf_count(), 6);
        let report = f_width(&g, &d, CutFunctionKind::Sim).unwrap();
        assert!(report.max <= 1);
    }
}

//! Co-comparability orderings: verification, backtracking search, and the
//! linear branch decomposition a valid ordering induces.

use std::collections::BTreeMap;

use crate::decomposition::{caterpillar_from_ordering, BranchDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Checks the ordering property: whenever an earlier vertex is adjacent to a
/// later one, every vertex in between is adjacent to one of the two. Returns
/// the violating triple `(v_i, v_j, v_k)` if any.
pub fn verify_cocomp_ordering(
    g: &Graph,
    order: &[VertexId],
) -> Result<Option<(VertexId, VertexId, VertexId)>> {
    let positions = permutation_positions(g, order)?;
    let n = positions.len();
    for i in 0..n {
        for k in i + 2..n {
            if !g.row(positions[i]).contains(positions[k]) {
                continue;
            }
            for j in i + 1..k {
                let pj = positions[j];
                if !g.row(pj).contains(positions[i]) && !g.row(pj).contains(positions[k]) {
                    return Ok(Some((order[i], order[j], order[k])));
                }
            }
        }
    }
    Ok(None)
}

fn permutation_positions(g: &Graph, order: &[VertexId]) -> Result<Vec<usize>> {
    if order.len() != g.vertex_count() {
        return Err(Error::InvalidArgument(format!(
            "ordering has {} vertices, graph has {}",
            order.len(),
            g.vertex_count()
        )));
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut positions = Vec::with_capacity(order.len());
    for &v in order {
        if !seen.insert(v) {
            return Err(Error::InvalidArgument(format!("ordering repeats {v}")));
        }
        positions.push(g.position(v)?);
    }
    Ok(positions)
}

/// Outcome of the backtracking search for a co-comparability ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CocompSearch {
    Found(Vec<VertexId>),
    /// The search space was exhausted: the graph has no such ordering.
    Exhausted,
    /// The node budget ran out before the search finished.
    BudgetExceeded,
}

pub const DEFAULT_SEARCH_BUDGET: u64 = 20_000_000;

/// Backtracking search over orderings with incremental violation pruning.
/// Intended for small graphs; generators that come with known orderings
/// should bypass it.
pub fn find_cocomp_ordering(g: &Graph) -> CocompSearch {
    find_cocomp_ordering_with_budget(g, DEFAULT_SEARCH_BUDGET)
}

pub fn find_cocomp_ordering_with_budget(g: &Graph, budget: u64) -> CocompSearch {
    let n = g.vertex_count();
    if n <= 2 {
        return CocompSearch::Found(g.vertex_ids().to_vec());
    }
    struct Search<'g> {
        g: &'g Graph,
        prefix: Vec<usize>,
        used: Vec<bool>,
        nodes: u64,
        budget: u64,
    }
    impl Search<'_> {
        /// Placing `p` next keeps every completed triple legal.
        fn placeable(&self, p: usize) -> bool {
            let k = self.prefix.len();
            for i in 0..k {
                if !self.g.row(self.prefix[i]).contains(p) {
                    continue;
                }
                for j in i + 1..k {
                    let pj = self.prefix[j];
                    if !self.g.row(pj).contains(self.prefix[i]) && !self.g.row(pj).contains(p) {
                        return false;
                    }
                }
            }
            true
        }

        fn run(&mut self) -> Option<bool> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            if self.prefix.len() == self.g.vertex_count() {
                return Some(true);
            }
            for p in 0..self.g.vertex_count() {
                if self.used[p] || !self.placeable(p) {
                    continue;
                }
                self.used[p] = true;
                self.prefix.push(p);
                match self.run() {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
                self.prefix.pop();
                self.used[p] = false;
            }
            Some(false)
        }
    }
    let mut search = Search {
        g,
        prefix: Vec::new(),
        used: vec![false; n],
        nodes: 0,
        budget,
    };
    match search.run() {
        Some(true) => {
            let order: Vec<VertexId> = search.prefix.iter().map(|&p| g.id_at(p)).collect();
            debug_assert_eq!(verify_cocomp_ordering(g, &order), Ok(None));
            CocompSearch::Found(order)
        }
        Some(false) => CocompSearch::Exhausted,
        None => CocompSearch::BudgetExceeded,
    }
}

/// Caterpillar decomposition along a verified co-comparability ordering. The
/// prefix cuts admit no crossing induced matching of size 2, so the result
/// has linear sim-width at most 1.
pub fn cocomp_linear_decomposition(g: &Graph, order: &[VertexId]) -> Result<BranchDecomposition> {
    if let Some(triple) = verify_cocomp_ordering(g, order)? {
        return Err(Error::NotCocompOrdering(triple));
    }
    if g.vertex_count() == 1 {
        return BranchDecomposition::new(&[], BTreeMap::from([(order[0], 0)]));
    }
    caterpillar_from_ordering(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cut::{simval, Cut, CutFunctionKind};
    use crate::decomposition::f_width;
    use crate::generators;
    use crate::graph::VertexSet;

    #[test]
    fn path_order_is_cocomp() {
        let g = Graph::path(3);
        assert_eq!(verify_cocomp_ordering(&g, &[0, 1, 2]).unwrap(), None);
    }

    #[test]
    fn ktst3_has_no_cocomp_ordering() {
        let g = generators::gen_ktst(3);
        // every ordering fails with a witness
        let mut perm: Vec<VertexId> = (0..6).collect();
        let mut count = 0usize;
        permute(&mut perm, 0, &mut |order| {
            count += 1;
            let witness = verify_cocomp_ordering(&g, order).unwrap();
            assert!(witness.is_some(), "ordering {order:?} accepted");
        });
        assert_eq!(count, 720);
        assert_eq!(find_cocomp_ordering(&g), CocompSearch::Exhausted);
    }

    fn permute(v: &mut Vec<VertexId>, k: usize, f: &mut impl FnMut(&[VertexId])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn complete_graph_any_order() {
        let g = Graph::complete(5);
        assert_eq!(verify_cocomp_ordering(&g, &[3, 1, 4, 0, 2]).unwrap(), None);
        assert!(matches!(find_cocomp_ordering(&g), CocompSearch::Found(_)));
    }

    #[test]
    fn column_grid_orderings_verify() {
        for p in 1..=6usize {
            for q in 1..=6usize {
                let (g, order) = generators::gen_column_clique_grid(p, q);
                assert_eq!(
                    verify_cocomp_ordering(&g, &order).unwrap(),
                    None,
                    "{p}x{q} column-major ordering rejected"
                );
            }
        }
    }

    #[test]
    fn column_grid_search_finds_ordering() {
        let (g, _) = generators::gen_column_clique_grid(4, 3);
        assert!(matches!(find_cocomp_ordering(&g), CocompSearch::Found(_)));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = generators::gen_ktst(3);
        assert_eq!(
            find_cocomp_ordering_with_budget(&g, 5),
            CocompSearch::BudgetExceeded
        );
    }

    #[test]
    fn rejects_non_permutations() {
        let g = Graph::path(3);
        assert!(verify_cocomp_ordering(&g, &[0, 1]).is_err());
        assert!(verify_cocomp_ordering(&g, &[0, 1, 1]).is_err());
        assert!(verify_cocomp_ordering(&g, &[0, 1, 7]).is_err());
    }

    #[test]
    fn grid_linear_decomposition_sim_width_1() {
        let (g, order) = generators::gen_column_clique_grid(4, 3);
        let d = cocomp_linear_decomposition(&g, &order).unwrap();
        assert!(d.is_linear());
        let report = f_width(&g, &d, CutFunctionKind::Sim).unwrap();
        assert!(report.max <= 1);
    }

    #[test]
    fn prefix_cuts_have_no_crossing_induced_2_matching() {
        // checked directly by pair search, independently of simval
        let (g, order) = generators::gen_column_clique_grid(3, 4);
        for i in 1..order.len() {
            let side: VertexSet = order[..i].iter().copied().collect();
            let crossing: Vec<(VertexId, VertexId)> = g
                .edges()
                .iter()
                .copied()
                .map(|(u, v)| if side.contains(&u) { (u, v) } else { (v, u) })
                .filter(|&(u, v)| side.contains(&u) && !side.contains(&v))
                .collect();
            for (ei, &(a1, b1)) in crossing.iter().enumerate() {
                for &(a2, b2) in &crossing[ei + 1..] {
                    if a1 == a2 || b1 == b2 {
                        continue;
                    }
                    let induced_in_g = !g.has_edge(a1, b2)
                        && !g.has_edge(a2, b1)
                        && !g.has_edge(a1, a2)
                        && !g.has_edge(b1, b2);
                    assert!(!induced_in_g, "prefix {i}: {a1}{b1} {a2}{b2}");
                }
            }
        }
    }

    #[test]
    fn permutation_graphs_mim_bound() {
        for seed in 0..10u64 {
            let g = generators::gen_random_permutation(10, seed);
            let order: Vec<VertexId> = g.vertex_ids().to_vec();
            assert_eq!(verify_cocomp_ordering(&g, &order).unwrap(), None);
            assert!(crate::patterns::detect_ktkt(&g, 3).unwrap().is_none());
            let d = cocomp_linear_decomposition(&g, &order).unwrap();
            let mim = f_width(&g, &d, CutFunctionKind::Mim).unwrap().max;
            assert!(mim <= 2, "seed {seed}: mim {mim}");
            let sim = f_width(&g, &d, CutFunctionKind::Sim).unwrap().max;
            assert!(sim <= 1);
        }
    }

    #[test]
    fn invalid_ordering_rejected_with_witness() {
        let g = generators::gen_ktst(3);
        let order: Vec<VertexId> = (0..6).collect();
        match cocomp_linear_decomposition(&g, &order) {
            Err(Error::NotCocompOrdering((a, b, c))) => {
                // the triple really violates the property
                assert!(g.has_edge(a, c) && !g.has_edge(b, a) && !g.has_edge(b, c));
            }
            other => panic!("expected ordering rejection, got {other:?}"),
        }
    }

    #[test]
    fn k2_decomposition() {
        let g = Graph::complete(2);
        let d = cocomp_linear_decomposition(&g, &[0, 1]).unwrap();
        let cuts = d.cuts(&g).unwrap();
        assert_eq!(cuts.len(), 1);
        assert_eq!(
            simval(&Cut::new(&g, &[0].into_iter().collect()).unwrap()).0,
            1
        );
    }
}

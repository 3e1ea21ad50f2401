//! Exact evaluators for the three symmetric cut functions: GF(2) cut-rank,
//! mim-value (maximum induced matching of the bipartite crossing graph) and
//! sim-value (maximum induced matching of the whole graph crossing the cut).

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::gf2::BitMatrixGf2;
use crate::graph::{Graph, VertexId, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CutFunctionKind {
    CutRank,
    Mim,
    Sim,
}

impl CutFunctionKind {
    pub const ALL: [CutFunctionKind; 3] = [
        CutFunctionKind::CutRank,
        CutFunctionKind::Mim,
        CutFunctionKind::Sim,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CutFunctionKind::CutRank => "cutrk",
            CutFunctionKind::Mim => "mim",
            CutFunctionKind::Sim => "sim",
        }
    }
}

impl std::str::FromStr for CutFunctionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cutrk" | "rank" => Ok(CutFunctionKind::CutRank),
            "mim" => Ok(CutFunctionKind::Mim),
            "sim" => Ok(CutFunctionKind::Sim),
            other => Err(Error::InvalidArgument(format!(
                "unknown cut function {other}"
            ))),
        }
    }
}

/// A vertex bipartition of a graph, held as one side; the other side is the
/// complement.
#[derive(Clone, Debug)]
pub struct Cut<'g> {
    graph: &'g Graph,
    side_a: BitSet,
}

impl<'g> Cut<'g> {
    pub fn new(graph: &'g Graph, side_a: &VertexSet) -> Result<Cut<'g>> {
        let a = graph.positions_of(side_a)?;
        Cut::from_positions(graph, a)
    }

    pub fn from_positions(graph: &'g Graph, side_a: BitSet) -> Result<Cut<'g>> {
        if side_a.is_empty() || side_a.len() == graph.vertex_count() {
            return Err(Error::InvalidArgument(
                "cut side must be a proper nonempty subset".into(),
            ));
        }
        Ok(Cut { graph, side_a })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn side_a(&self) -> &BitSet {
        &self.side_a
    }

    pub fn side_a_ids(&self) -> VertexSet {
        self.graph.ids_of(&self.side_a)
    }

    pub fn side_b_ids(&self) -> VertexSet {
        self.graph.ids_of(&self.side_a.complement())
    }
}

/// Crossing edges of a matching witness, as `(vertex in A, vertex in B)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatchingWitness {
    pub pairs: Vec<(VertexId, VertexId)>,
}

impl MatchingWitness {
    /// All pairs are edges crossing the cut, with distinct endpoints, and no
    /// two pairs are joined by a crossing edge. With `whole_graph` set, no two
    /// endpoints are adjacent at all beyond the matching edges.
    pub fn validate(&self, cut: &Cut<'_>, whole_graph: bool) -> bool {
        let g = cut.graph();
        let a = cut.side_a();
        let mut seen = VertexSet::new();
        for &(x, y) in &self.pairs {
            let (Ok(px), Ok(py)) = (g.position(x), g.position(y)) else {
                return false;
            };
            if !a.contains(px) || a.contains(py) || !g.has_edge(x, y) {
                return false;
            }
            if !seen.insert(x) || !seen.insert(y) {
                return false;
            }
        }
        for (i, &(x1, y1)) in self.pairs.iter().enumerate() {
            for &(x2, y2) in &self.pairs[i + 1..] {
                if g.has_edge(x1, y2) || g.has_edge(x2, y1) {
                    return false;
                }
                if whole_graph && (g.has_edge(x1, x2) || g.has_edge(y1, y2)) {
                    return false;
                }
            }
        }
        true
    }
}

/// GF(2) rank of the biadjacency matrix across the cut.
pub fn cutrk(cut: &Cut<'_>) -> usize {
    let g = cut.graph();
    let a = cut.side_a();
    let b = a.complement();
    let cols: Vec<usize> = b.iter().collect();
    let col_index: std::collections::HashMap<usize, usize> =
        cols.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut rows = Vec::with_capacity(a.len());
    for p in a.iter() {
        let mut row = BitSet::new(cols.len());
        for q in g.row(p).iter() {
            if let Some(&ci) = col_index.get(&q) {
                row.insert(ci);
            }
        }
        rows.push(row);
    }
    BitMatrixGf2::from_rows(rows, cols.len()).rank()
}

/// Maximum induced matching of the bipartite crossing graph; edges inside
/// either side are ignored.
pub fn mimval(cut: &Cut<'_>) -> (usize, MatchingWitness) {
    induced_matching(cut, false)
}

/// Maximum induced matching of the whole graph all of whose edges cross the
/// cut; adjacencies inside a side disqualify endpoint pairs.
pub fn simval(cut: &Cut<'_>) -> (usize, MatchingWitness) {
    induced_matching(cut, true)
}

/// Evaluates a cut function by kind.
pub fn evaluate(kind: CutFunctionKind, cut: &Cut<'_>) -> usize {
    match kind {
        CutFunctionKind::CutRank => cutrk(cut),
        CutFunctionKind::Mim => mimval(cut).0,
        CutFunctionKind::Sim => simval(cut).0,
    }
}

/// Exact branch-and-bound over crossing edges. The problem is a maximum
/// independent set in the conflict graph over crossing edges, where two
/// crossing edges conflict if they share an endpoint, if a crossing edge
/// joins them, or (for sim) if any edge of G joins them.
fn induced_matching(cut: &Cut<'_>, whole_graph: bool) -> (usize, MatchingWitness) {
    let g = cut.graph();
    let a = cut.side_a();
    let b = a.complement();
    // crossing edges in canonical order: ascending (id in A, id in B)
    let mut crossing: Vec<(usize, usize)> = Vec::new();
    for p in a.iter() {
        for q in g.row(p).intersect(&b).iter() {
            crossing.push((p, q));
        }
    }
    crossing.sort_by_key(|&(p, q)| (g.id_at(p), g.id_at(q)));
    let m = crossing.len();
    if m == 0 {
        return (0, MatchingWitness::default());
    }

    let mut conflicts = vec![BitSet::new(m); m];
    for i in 0..m {
        let (a1, b1) = crossing[i];
        for j in i + 1..m {
            let (a2, b2) = crossing[j];
            let mut clash =
                a1 == a2 || b1 == b2 || g.row(a1).contains(b2) || g.row(a2).contains(b1);
            if whole_graph && !clash {
                clash = g.row(a1).contains(a2) || g.row(b1).contains(b2);
            }
            if clash {
                conflicts[i].insert(j);
                conflicts[j].insert(i);
            }
        }
    }

    let mut search = MisSearch {
        conflicts: &conflicts,
        best: 0,
        best_set: Vec::new(),
        current: Vec::new(),
    };
    search.run(BitSet::full(m));
    let pairs = search
        .best_set
        .iter()
        .map(|&i| {
            let (p, q) = crossing[i];
            (g.id_at(p), g.id_at(q))
        })
        .collect();
    (search.best, MatchingWitness { pairs })
}

struct MisSearch<'a> {
    conflicts: &'a [BitSet],
    best: usize,
    best_set: Vec<usize>,
    current: Vec<usize>,
}

impl MisSearch<'_> {
    fn run(&mut self, candidates: BitSet) {
        // candidate count is the upper bound; the first descent is the greedy
        // lower bound
        if self.current.len() + candidates.len() <= self.best {
            return;
        }
        let Some(e) = candidates.first() else {
            // strictly better than best by the bound above
            self.best = self.current.len();
            self.best_set = self.current.clone();
            return;
        };
        let mut without = candidates.clone();
        without.remove(e);
        // take e
        self.current.push(e);
        self.run(without.difference(&self.conflicts[e]));
        self.current.pop();
        // skip e
        self.run(without);
    }
}

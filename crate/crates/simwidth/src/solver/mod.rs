//! Locally checkable vertex subset and partitioning problems: constraint-set
//! types, feasibility checkers, brute-force oracles, and the dynamic program
//! over branch decompositions (in [`dp`]).

pub mod classes;
pub mod dp;

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

pub use dp::{
    solve_dq_partition, solve_dq_partition_with_stats, solve_sigma_rho, solve_sigma_rho_with_stats,
    NodeStats, PartitionSolution, SigmaRhoSolution, SolveStats,
};

/// A finite or co-finite subset of the naturals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCofSet {
    cofinite: bool,
    listed: BTreeSet<usize>,
}

impl FinCofSet {
    pub fn finite(listed: impl IntoIterator<Item = usize>) -> Self {
        FinCofSet {
            cofinite: false,
            listed: listed.into_iter().collect(),
        }
    }

    /// Complement of the listed set.
    pub fn cofinite(listed: impl IntoIterator<Item = usize>) -> Self {
        FinCofSet {
            cofinite: true,
            listed: listed.into_iter().collect(),
        }
    }

    /// All naturals.
    pub fn naturals() -> Self {
        FinCofSet::cofinite([])
    }

    /// All positive naturals.
    pub fn positives() -> Self {
        FinCofSet::cofinite([0])
    }

    pub fn is_cofinite(&self) -> bool {
        self.cofinite
    }

    /// The empty finite set: no count ever qualifies.
    pub fn is_degenerate_empty(&self) -> bool {
        !self.cofinite && self.listed.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.listed.contains(&x) != self.cofinite
    }

    /// Resolution needed to decide membership: 0 for the full set of
    /// naturals (and for the degenerate empty set), otherwise one more than
    /// the largest listed element, which is the largest member for finite
    /// sets and the largest non-member for co-finite ones.
    pub fn d_value(&self) -> usize {
        match self.listed.iter().next_back() {
            None => 0,
            Some(&m) => m + 1,
        }
    }

    /// Membership decided from `t = min(d, x)`, valid whenever
    /// `d >= self.d_value()`: counts at or above `d` are all members
    /// (co-finite) or all non-members (finite).
    pub fn contains_truncated(&self, t: usize, d: usize) -> bool {
        debug_assert!(d >= self.d_value() && t <= d);
        if t < d {
            self.contains(t)
        } else {
            self.cofinite
        }
    }
}

impl std::fmt::Display for FinCofSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:", if self.cofinite { "cofinite" } else { "finite" })?;
        for (i, x) in self.listed.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for FinCofSet {
    type Err = Error;

    /// `finite:0,2,4` or `cofinite:0`; an empty list is allowed
    /// (`cofinite:` is the set of all naturals).
    fn from_str(s: &str) -> Result<Self> {
        let (mode, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidArgument(format!("missing ':' in set {s:?}")))?;
        let cofinite = match mode {
            "finite" => false,
            "cofinite" => true,
            other => {
                return Err(Error::InvalidArgument(format!(
                    "set mode must be finite or cofinite, got {other:?}"
                )))
            }
        };
        let mut listed = BTreeSet::new();
        for part in rest.split(',').filter(|p| !p.is_empty()) {
            let x: usize = part
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad number {part:?} in set")))?;
            listed.insert(x);
        }
        Ok(FinCofSet { cofinite, listed })
    }
}

/// A q x q matrix of degree constraints for partitioning problems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeConstraintMatrix {
    entries: Vec<Vec<FinCofSet>>,
}

impl DegreeConstraintMatrix {
    pub fn new(entries: Vec<Vec<FinCofSet>>) -> Result<Self> {
        let q = entries.len();
        if q == 0 || entries.iter().any(|row| row.len() != q) {
            return Err(Error::InvalidArgument(
                "constraint matrix must be square and nonempty".into(),
            ));
        }
        Ok(DegreeConstraintMatrix { entries })
    }

    /// Proper q-coloring: no neighbors inside the own part, anything across.
    pub fn coloring(q: usize) -> Self {
        let entries = (0..q)
            .map(|i| {
                (0..q)
                    .map(|j| {
                        if i == j {
                            FinCofSet::finite([0])
                        } else {
                            FinCofSet::naturals()
                        }
                    })
                    .collect()
            })
            .collect();
        DegreeConstraintMatrix { entries }
    }

    pub fn q(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &FinCofSet {
        &self.entries[i][j]
    }

    pub fn d_value(&self) -> usize {
        self.entries
            .iter()
            .flatten()
            .map(FinCofSet::d_value)
            .max()
            .unwrap_or(0)
    }
}

/// A problem the CLI and solver accept, parsed from its text form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Problem {
    SigmaRho { sigma: FinCofSet, rho: FinCofSet },
    Partition(DegreeConstraintMatrix),
}

impl std::str::FromStr for Problem {
    type Err = Error;

    /// Named problems `dominating-set`, `independent-set`,
    /// `total-dominating-set`, `coloring:q`, or raw
    /// `sigma=<set>;rho=<set>`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dominating-set" => Ok(Problem::SigmaRho {
                sigma: FinCofSet::naturals(),
                rho: FinCofSet::positives(),
            }),
            "independent-set" => Ok(Problem::SigmaRho {
                sigma: FinCofSet::finite([0]),
                rho: FinCofSet::naturals(),
            }),
            "total-dominating-set" => Ok(Problem::SigmaRho {
                sigma: FinCofSet::positives(),
                rho: FinCofSet::positives(),
            }),
            _ => {
                if let Some(q) = s.strip_prefix("coloring:") {
                    let q: usize = q
                        .parse()
                        .map_err(|_| Error::InvalidArgument(format!("bad color count {q:?}")))?;
                    if q == 0 {
                        return Err(Error::InvalidArgument("coloring needs q >= 1".into()));
                    }
                    return Ok(Problem::Partition(DegreeConstraintMatrix::coloring(q)));
                }
                let mut sigma = None;
                let mut rho = None;
                for part in s.split(';') {
                    if let Some(v) = part.strip_prefix("sigma=") {
                        sigma = Some(v.parse()?);
                    } else if let Some(v) = part.strip_prefix("rho=") {
                        rho = Some(v.parse()?);
                    } else if !part.is_empty() {
                        return Err(Error::InvalidArgument(format!(
                            "unknown problem part {part:?}"
                        )));
                    }
                }
                match (sigma, rho) {
                    (Some(sigma), Some(rho)) => Ok(Problem::SigmaRho { sigma, rho }),
                    _ => Err(Error::InvalidArgument(format!("unknown problem {s:?}"))),
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    Min,
    Max,
}

impl std::str::FromStr for Objective {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Objective::Min),
            "max" => Ok(Objective::Max),
            other => Err(Error::InvalidArgument(format!(
                "objective must be min or max, got {other:?}"
            ))),
        }
    }
}

/// Non-negative integer vertex weights; missing vertices weigh 1.
pub type Weights = std::collections::BTreeMap<VertexId, u64>;

pub fn weight_of(weights: Option<&Weights>, v: VertexId) -> u64 {
    weights.and_then(|w| w.get(&v).copied()).unwrap_or(1)
}

/// True iff every selected vertex sees a sigma-count and every unselected
/// vertex a rho-count of selected neighbors.
pub fn check_sigma_rho(
    g: &Graph,
    selected: &VertexSet,
    sigma: &FinCofSet,
    rho: &FinCofSet,
) -> Result<bool> {
    let sel = g.positions_of(selected)?;
    for &v in g.vertex_ids() {
        let p = g.position(v)?;
        let count = g.row(p).intersection_size(&sel);
        let set = if sel.contains(p) { sigma } else { rho };
        if !set.contains(count) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff `parts` is a partition of V(G) and every vertex's neighbor count
/// into every part obeys the matrix.
pub fn check_dq_partition(
    g: &Graph,
    parts: &[VertexSet],
    dq: &DegreeConstraintMatrix,
) -> Result<bool> {
    if parts.len() != dq.q() {
        return Err(Error::InvalidArgument(format!(
            "{} parts for a {}x{} matrix",
            parts.len(),
            dq.q(),
            dq.q()
        )));
    }
    let masks = parts
        .iter()
        .map(|p| g.positions_of(p))
        .collect::<Result<Vec<_>>>()?;
    let mut union = crate::bitset::BitSet::new(g.vertex_count());
    let mut total = 0;
    for m in &masks {
        total += m.len();
        union.union_with(m);
    }
    if total != g.vertex_count() || union.len() != g.vertex_count() {
        return Err(Error::InvalidArgument(
            "parts do not partition the vertex set".into(),
        ));
    }
    for (i, part) in masks.iter().enumerate() {
        for p in part.iter() {
            for (j, other) in masks.iter().enumerate() {
                let count = g.row(p).intersection_size(other);
                if !dq.get(i, j).contains(count) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Exhaustive optimum over all vertex subsets. Refuses graphs beyond 20
/// vertices.
pub fn brute_sigma_rho(
    g: &Graph,
    sigma: &FinCofSet,
    rho: &FinCofSet,
    objective: Objective,
    weights: Option<&Weights>,
) -> Result<Option<SigmaRhoSolution>> {
    let n = g.vertex_count();
    if n > 20 {
        return Err(Error::TooLarge(format!(
            "{n} vertices is beyond the 2^20 subset scan"
        )));
    }
    let ids = g.vertex_ids();
    let mut best: Option<SigmaRhoSolution> = None;
    for mask in 0u64..(1 << n) {
        let selected: VertexSet = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| ids[i])
            .collect();
        if !check_sigma_rho(g, &selected, sigma, rho)? {
            continue;
        }
        let objective_value: u64 = selected.iter().map(|&v| weight_of(weights, v)).sum();
        let better = match &best {
            None => true,
            Some(b) => match objective {
                Objective::Min => objective_value < b.objective,
                Objective::Max => objective_value > b.objective,
            },
        };
        if better {
            best = Some(SigmaRhoSolution {
                selected,
                objective: objective_value,
            });
        }
    }
    Ok(best)
}

/// Exhaustive search over all q^n assignments. Refuses instances beyond 10^7
/// assignments.
pub fn brute_dq(g: &Graph, dq: &DegreeConstraintMatrix) -> Result<Option<PartitionSolution>> {
    let n = g.vertex_count();
    let q = dq.q();
    let total = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > 10_000_000 {
        return Err(Error::TooLarge(format!(
            "{q}^{n} assignments is beyond the scan budget"
        )));
    }
    let ids = g.vertex_ids();
    let mut assignment = vec![0usize; n];
    loop {
        let mut parts = vec![VertexSet::new(); q];
        for (i, &part) in assignment.iter().enumerate() {
            parts[part].insert(ids[i]);
        }
        if check_dq_partition(g, &parts, dq)? {
            return Ok(Some(PartitionSolution { parts }));
        }
        // odometer step
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(None);
            }
            assignment[pos] += 1;
            if assignment[pos] < q {
                break;
            }
            assignment[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_values_from_the_standard_sets() {
        assert_eq!(FinCofSet::naturals().d_value(), 0);
        assert_eq!(FinCofSet::positives().d_value(), 1);
        assert_eq!(FinCofSet::finite([0]).d_value(), 1);
        assert_eq!(FinCofSet::finite([0, 2]).d_value(), 3);
        assert_eq!(FinCofSet::cofinite([0, 1, 5]).d_value(), 6);
        // degenerate empty finite set
        let empty = FinCofSet::finite([]);
        assert!(empty.is_degenerate_empty());
        assert_eq!(empty.d_value(), 0);
    }

    #[test]
    fn truncated_membership_agrees() {
        for set in [
            FinCofSet::naturals(),
            FinCofSet::positives(),
            FinCofSet::finite([0]),
            FinCofSet::finite([1, 3]),
            FinCofSet::cofinite([0, 2]),
            FinCofSet::finite([]),
        ] {
            for d in set.d_value()..set.d_value() + 3 {
                for x in 0..10usize {
                    assert_eq!(
                        set.contains_truncated(x.min(d), d),
                        set.contains(x),
                        "{set} d={d} x={x}"
                    );
                }
            }
        }
    }

    #[test]
    fn parse_round_trip() {
        for text in ["finite:0,2,4", "cofinite:0", "cofinite:", "finite:"] {
            let set: FinCofSet = text.parse().unwrap();
            assert_eq!(set.to_string(), text);
        }
        assert!("donuts:1".parse::<FinCofSet>().is_err());
        assert!("finite:a".parse::<FinCofSet>().is_err());
    }

    #[test]
    fn named_problems() {
        let p: Problem = "dominating-set".parse().unwrap();
        assert_eq!(
            p,
            Problem::SigmaRho {
                sigma: FinCofSet::naturals(),
                rho: FinCofSet::positives()
            }
        );
        let p: Problem = "coloring:3".parse().unwrap();
        match p {
            Problem::Partition(m) => {
                assert_eq!(m.q(), 3);
                assert_eq!(m.d_value(), 1);
            }
            _ => panic!(),
        }
        let p: Problem = "sigma=finite:0;rho=cofinite:".parse().unwrap();
        assert_eq!(
            p,
            Problem::SigmaRho {
                sigma: FinCofSet::finite([0]),
                rho: FinCofSet::naturals()
            }
        );
        assert!("coloring:0".parse::<Problem>().is_err());
        assert!("dancing".parse::<Problem>().is_err());
    }

    #[test]
    fn independent_and_dominating_checks() {
        let g = Graph::path(4);
        let ind: VertexSet = [0, 2].into_iter().collect();
        assert!(
            check_sigma_rho(&g, &ind, &FinCofSet::finite([0]), &FinCofSet::naturals()).unwrap()
        );
        let not_ind: VertexSet = [0, 1].into_iter().collect();
        assert!(!check_sigma_rho(
            &g,
            &not_ind,
            &FinCofSet::finite([0]),
            &FinCofSet::naturals()
        )
        .unwrap());
        let dom: VertexSet = [1, 3].into_iter().collect();
        assert!(
            check_sigma_rho(&g, &dom, &FinCofSet::naturals(), &FinCofSet::positives()).unwrap()
        );
        // the empty set dominates nothing
        assert!(!check_sigma_rho(
            &g,
            &VertexSet::new(),
            &FinCofSet::naturals(),
            &FinCofSet::positives()
        )
        .unwrap());
    }

    #[test]
    fn coloring_checks() {
        let g = Graph::complete(3);
        let q1 = DegreeConstraintMatrix::new(vec![vec![FinCofSet::naturals()]]).unwrap();
        assert!(check_dq_partition(&g, &[g.vertex_set()], &q1).unwrap());
        let two = DegreeConstraintMatrix::coloring(2);
        let parts: Vec<VertexSet> = vec![[0, 1].into_iter().collect(), [2].into_iter().collect()];
        assert!(!check_dq_partition(&g, &parts, &two).unwrap());
        // K3 has no proper 2-coloring at all
        assert!(brute_dq(&g, &two).unwrap().is_none());
        // C4 is bipartite
        assert!(brute_dq(&Graph::cycle(4), &two).unwrap().is_some());
        // non-partitions are errors, not failures
        let bad: Vec<VertexSet> = vec![[0].into_iter().collect(), [0, 1, 2].into_iter().collect()];
        assert!(check_dq_partition(&g, &bad, &two).is_err());
    }

    #[test]
    fn brute_domination_values() {
        let g = Graph::cycle(4);
        let best = brute_sigma_rho(
            &g,
            &FinCofSet::naturals(),
            &FinCofSet::positives(),
            Objective::Min,
            None,
        )
        .unwrap()
        .unwrap();
        assert_eq!(best.objective, 2);

        let kt = crate::generators::gen_ktst(3);
        let dom = brute_sigma_rho(
            &kt,
            &FinCofSet::naturals(),
            &FinCofSet::positives(),
            Objective::Min,
            None,
        )
        .unwrap()
        .unwrap();
        assert_eq!(dom.objective, 3);
        let mis = brute_sigma_rho(
            &kt,
            &FinCofSet::finite([0]),
            &FinCofSet::naturals(),
            Objective::Max,
            None,
        )
        .unwrap()
        .unwrap();
        assert_eq!(mis.objective, 3);
        // min dominating set of a clique is a single vertex
        let k6 = Graph::complete(6);
        let dom = brute_sigma_rho(
            &k6,
            &FinCofSet::naturals(),
            &FinCofSet::positives(),
            Objective::Min,
            None,
        )
        .unwrap()
        .unwrap();
        assert_eq!(dom.objective, 1);
    }

    #[test]
    fn hsu_grid_domination_number() {
        // frozen from the first exhaustive run: one top-row vertex in the
        // middle column reaches both adjacent columns fully
        let g = crate::generators::gen_hsu_clique_chain(3, 3);
        let best = brute_sigma_rho(
            &g,
            &FinCofSet::naturals(),
            &FinCofSet::positives(),
            Objective::Min,
            None,
        )
        .unwrap()
        .unwrap();
        assert_eq!(best.objective, 2);
    }

    #[test]
    fn brute_size_refusals() {
        let g = Graph::empty(21);
        assert!(matches!(
            brute_sigma_rho(
                &g,
                &FinCofSet::naturals(),
                &FinCofSet::naturals(),
                Objective::Min,
                None
            ),
            Err(Error::TooLarge(_))
        ));
        let g = Graph::empty(30);
        assert!(matches!(
            brute_dq(&g, &DegreeConstraintMatrix::coloring(3)),
            Err(Error::TooLarge(_))
        ));
    }
}

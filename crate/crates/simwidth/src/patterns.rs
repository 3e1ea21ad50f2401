//! Detection of the two matching patterns as induced subgraphs, and the
//! closed-form mim-width bound formulas for graphs excluding them.

use num_bigint::BigUint;
use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternKind {
    /// Two cliques joined by a perfect matching.
    KtKt,
    /// A clique and an independent set joined by a perfect matching.
    KtSt,
}

/// An induced occurrence of a pattern: `clique[i]` is matched to
/// `partners[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternWitness {
    pub kind: PatternKind,
    pub clique: Vec<VertexId>,
    pub partners: Vec<VertexId>,
}

impl PatternWitness {
    pub fn order(&self) -> usize {
        self.clique.len()
    }

    /// Checks the induced subgraph on the 2t vertices really is the pattern.
    pub fn verify(&self, g: &Graph) -> bool {
        let t = self.clique.len();
        if t != self.partners.len() {
            return false;
        }
        let mut all: Vec<VertexId> = self.clique.iter().chain(&self.partners).copied().collect();
        all.sort_unstable();
        all.dedup();
        if all.len() != 2 * t || all.iter().any(|&v| !g.contains_vertex(v)) {
            return false;
        }
        for i in 0..t {
            for j in 0..t {
                if i != j && !g.has_edge(self.clique[i], self.clique[j]) {
                    return false;
                }
                if g.has_edge(self.clique[i], self.partners[j]) != (i == j) {
                    return false;
                }
                let partner_adjacent = i != j && g.has_edge(self.partners[i], self.partners[j]);
                match self.kind {
                    PatternKind::KtKt => {
                        if i != j && !partner_adjacent {
                            return false;
                        }
                    }
                    PatternKind::KtSt => {
                        if partner_adjacent {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Finds an induced clique-to-independent-set matching pattern of order `t`.
pub fn detect_ktst(g: &Graph, t: usize) -> Result<Option<PatternWitness>> {
    detect(g, t, PatternKind::KtSt)
}

/// Finds an induced clique-to-clique matching pattern of order `t`.
pub fn detect_ktkt(g: &Graph, t: usize) -> Result<Option<PatternWitness>> {
    detect(g, t, PatternKind::KtKt)
}

fn detect(g: &Graph, t: usize, kind: PatternKind) -> Result<Option<PatternWitness>> {
    if t < 2 {
        return Err(Error::InvalidArgument(
            "pattern order must be at least 2".into(),
        ));
    }
    let n = g.vertex_count();
    if n < 2 * t {
        return Ok(None);
    }
    let mut clique: Vec<usize> = Vec::with_capacity(t);
    let mut found = None;
    enumerate_cliques(g, t, 0, &mut clique, &mut |clique| {
        // partner pool of each clique member: adjacent to it and nothing
        // else in the clique; pools are automatically disjoint
        let mut pools: Vec<Vec<usize>> = Vec::with_capacity(t);
        for (i, &c) in clique.iter().enumerate() {
            let mut pool = g.row(c).clone();
            for (j, &other) in clique.iter().enumerate() {
                if j != i {
                    pool = pool.difference(g.row(other));
                }
                pool.remove(other);
            }
            if pool.is_empty() {
                return true;
            }
            pools.push(pool.iter().collect());
        }
        let mut partners: Vec<usize> = Vec::with_capacity(t);
        if pick_partners(g, kind, &pools, &mut partners) {
            found = Some(PatternWitness {
                kind,
                clique: clique.iter().map(|&p| g.id_at(p)).collect(),
                partners: partners.iter().map(|&p| g.id_at(p)).collect(),
            });
            return false;
        }
        true
    });
    debug_assert!(found.as_ref().is_none_or(|w: &PatternWitness| w.verify(g)));
    Ok(found)
}

/// Calls `visit` for every clique of size `t` (as ascending positions);
/// stops early when `visit` returns false.
fn enumerate_cliques(
    g: &Graph,
    t: usize,
    from: usize,
    clique: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if clique.len() == t {
        return visit(clique);
    }
    for p in from..g.vertex_count() {
        if clique.iter().all(|&c| g.row(c).contains(p)) {
            clique.push(p);
            if !enumerate_cliques(g, t, p + 1, clique, visit) {
                clique.pop();
                return false;
            }
            clique.pop();
        }
    }
    true
}

fn pick_partners(
    g: &Graph,
    kind: PatternKind,
    pools: &[Vec<usize>],
    chosen: &mut Vec<usize>,
) -> bool {
    let i = chosen.len();
    if i == pools.len() {
        return true;
    }
    for &s in &pools[i] {
        let compatible = chosen.iter().all(|&prev| match kind {
            PatternKind::KtKt => g.row(prev).contains(s),
            PatternKind::KtSt => !g.row(prev).contains(s),
        });
        if compatible {
            chosen.push(s);
            if pick_partners(g, kind, pools, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Mim-width bound for graphs of sim-width `w` excluding both patterns of
/// order `t` as induced minors: `8(w+1)t^3 - 1`.
pub fn mimw_bound_induced_minor(w: u64, t: u64) -> u64 {
    assert!(w >= 1 && t >= 2);
    8 * (w + 1) * t * t * t - 1
}

/// Binomial upper bound on the Ramsey number R(k, l):
/// `C(k + l - 2, k - 1)`.
pub fn ramsey_upper_bound(k: u64, l: u64) -> BigUint {
    assert!(k >= 1 && l >= 1);
    binomial(k + l - 2, k - 1)
}

fn binomial(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k.min(n));
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Upper bound on the nested Ramsey expression R(R(w+1, t), R(t, t)) bounding
/// mim-width for graphs of sim-width `w` excluding both patterns of order `t`
/// as induced subgraphs. Exact Ramsey numbers are unknown in general, so all
/// three are replaced by their binomial upper bounds; the result is an upper
/// bound, not the exact value.
pub fn mimw_bound_induced_subgraph(w: u64, t: u64) -> Result<BigUint> {
    assert!(w >= 1 && t >= 2);
    let inner1 = ramsey_upper_bound(w + 1, t);
    let inner2 = ramsey_upper_bound(t, t);
    let cap = BigUint::from(100_000_000u64);
    if inner1 > cap || inner2 > cap {
        return Err(Error::TooLarge(format!(
            "inner Ramsey bounds {inner1} and {inner2} are beyond evaluation range"
        )));
    }
    let a: u64 = inner1.try_into().expect("capped");
    let b: u64 = inner2.try_into().expect("capped");
    Ok(ramsey_upper_bound(a, b))
}

/// Lower bound on the mim-width of a d-degenerate graph with tree-width at
/// least `tw`: `(tw + 1) / (3 (d + 1))`.
pub fn mimw_lb_degenerate(tw: u64, d: u64) -> Rational64 {
    Rational64::new(tw as i64 + 1, 3 * (d as i64 + 1))
}

//! 0/1 matrices over GF(2).

use crate::bitset::BitSet;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// A binary matrix; rows are bitsets over the column index range.
#[derive(Clone, Debug)]
pub struct BitMatrixGf2 {
    rows: Vec<BitSet>,
    ncols: usize,
}

impl BitMatrixGf2 {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        BitMatrixGf2 {
            rows: vec![BitSet::new(ncols); nrows],
            ncols,
        }
    }

    pub fn from_rows(rows: Vec<BitSet>, ncols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.capacity() == ncols));
        BitMatrixGf2 { rows, ncols }
    }

    pub fn set(&mut self, r: usize, c: usize) {
        self.rows[r].insert(c);
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].contains(c)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn transpose(&self) -> BitMatrixGf2 {
        let mut t = BitMatrixGf2::new(self.ncols, self.nrows());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.iter() {
                t.set(c, r);
            }
        }
        t
    }

    /// Row rank over GF(2) by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<BitSet> = self
            .rows
            .iter()
            .filter(|r| !r.is_empty())
            .cloned()
            .collect();
        let mut rank = 0;
        for col in 0..self.ncols {
            let Some(pivot) = (rank..rows.len()).find(|&i| rows[i].contains(col)) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && row.contains(col) {
                    // XOR in GF(2): symmetric difference of the bit rows
                    let mut xored = row.union(&pivot_row);
                    let both = row.intersect(&pivot_row);
                    xored = xored.difference(&both);
                    *row = xored;
                }
            }
            rank += 1;
        }
        rank
    }

    /// The biadjacency matrix `M[A, V(G) \ A]`.
    pub fn biadjacency(g: &Graph, side_a: &VertexSet) -> Result<BitMatrixGf2> {
        let a = g.positions_of(side_a)?;
        let b = a.complement();
        let cols: Vec<usize> = b.iter().collect();
        let col_index: std::collections::HashMap<usize, usize> =
            cols.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut m = BitMatrixGf2::new(a.len(), cols.len());
        for (ri, p) in a.iter().enumerate() {
            for q in g.row(p).iter() {
                if let Some(&ci) = col_index.get(&q) {
                    m.set(ri, ci);
                }
            }
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn mat(rows: &[&[usize]], ncols: usize) -> BitMatrixGf2 {
        let rows = rows
            .iter()
            .map(|r| BitSet::from_indices(ncols, r.iter().copied()))
            .collect();
        BitMatrixGf2::from_rows(rows, ncols)
    }

    #[test]
    fn identity_rank() {
        assert_eq!(mat(&[&[0], &[1]], 2).rank(), 2);
    }

    #[test]
    fn all_ones_rank() {
        assert_eq!(mat(&[&[0, 1, 2], &[0, 1, 2], &[0, 1, 2]], 3).rank(), 1);
    }

    #[test]
    fn gf2_cancellation() {
        // over GF(2), r3 = r1 + r2 so rank is 2
        assert_eq!(mat(&[&[0, 1], &[1, 2], &[0, 2]], 3).rank(), 2);
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let m = mat(&[&[0, 1, 3], &[1, 2], &[0, 2, 3], &[3]], 4);
        assert_eq!(m.rank(), m.transpose().rank());
        assert!(m.rank() <= m.nrows().min(m.ncols()));
    }

    #[test]
    fn perfect_matching_biadjacency_rank() {
        // matching side of K4 + pendant partners: identity biadjacency
        let mut edges = vec![];
        for u in 0..4u32 {
            for v in u + 1..4 {
                edges.push((u, v));
            }
        }
        for i in 0..4u32 {
            edges.push((i, i + 4));
        }
        let g = Graph::from_edges(8, &edges).unwrap();
        let a: crate::graph::VertexSet = (0..4).collect();
        let m = BitMatrixGf2::biadjacency(&g, &a).unwrap();
        assert_eq!(m.rank(), 4);
    }
}

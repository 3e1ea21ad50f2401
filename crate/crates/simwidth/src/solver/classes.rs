//! d-neighborhood equivalence classes over one side of a cut. Two subsets of
//! a side are equivalent when every outside vertex sees the same number of
//! their members, counted up to d. Class keys are the truncated neighborhood
//! count vectors; every realizable key is enumerated exactly once by a
//! subset dynamic program over the side's vertices.

use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_CLASSES: usize = 2_000_000;

/// Classes of subsets of `side` under d-neighborhood equivalence, with one
/// canonical representative witness per class (the first found by the
/// vertex-insertion program, which is deterministic).
pub struct NeighborClassIndex {
    outside: Vec<usize>,
    d: usize,
    key_of: HashMap<Vec<u8>, u32>,
    reps: Vec<BitSet>,
}

impl NeighborClassIndex {
    /// Enumerates every realizable class: processing side vertices one at a
    /// time, the reachable key set after vertex x is the union of the keys
    /// without x and the keys extended by x.
    pub fn build(g: &Graph, side: &BitSet, d: usize) -> Result<NeighborClassIndex> {
        let outside: Vec<usize> = side.complement().iter().collect();
        let mut key_of = HashMap::new();
        let mut reps: Vec<BitSet> = Vec::new();
        let empty_key = vec![0u8; outside.len()];
        key_of.insert(empty_key, 0u32);
        reps.push(BitSet::new(g.vertex_count()));
        let mut entries: Vec<Vec<u8>> = vec![vec![0u8; outside.len()]];
        for x in side.iter() {
            let snapshot = entries.len();
            for idx in 0..snapshot {
                let mut key = entries[idx].clone();
                for (ci, &v) in outside.iter().enumerate() {
                    if g.row(v).contains(x) && (key[ci] as usize) < d {
                        key[ci] += 1;
                    }
                }
                if !key_of.contains_key(&key) {
                    let id = reps.len() as u32;
                    if reps.len() >= MAX_CLASSES {
                        return Err(Error::TooLarge(format!(
                            "more than {MAX_CLASSES} equivalence classes on one cut side"
                        )));
                    }
                    let base = key_of[&entries[idx]];
                    let mut witness = reps[base as usize].clone();
                    witness.insert(x);
                    key_of.insert(key.clone(), id);
                    reps.push(witness);
                    entries.push(key);
                }
            }
        }
        Ok(NeighborClassIndex {
            outside,
            d,
            key_of,
            reps,
        })
    }

    pub fn class_count(&self) -> usize {
        self.reps.len()
    }

    pub fn rep(&self, class: u32) -> &BitSet {
        &self.reps[class as usize]
    }

    pub fn key_of_subset(&self, g: &Graph, subset: &BitSet) -> Vec<u8> {
        self.outside
            .iter()
            .map(|&v| g.row(v).intersection_size(subset).min(self.d) as u8)
            .collect()
    }

    /// Class of a subset of the side. The subset-DP enumerated every
    /// realizable key, so the lookup always succeeds for genuine subsets.
    pub fn class_of_subset(&self, g: &Graph, subset: &BitSet) -> u32 {
        let key = self.key_of_subset(g, subset);
        *self
            .key_of
            .get(&key)
            .expect("every realizable key is enumerated")
    }
}

/// Classes of ordered q-partitions of `side`, keyed by the concatenation of
/// the per-part truncated count vectors.
pub struct PartitionClassIndex {
    outside: Vec<usize>,
    q: usize,
    d: usize,
    key_of: HashMap<Vec<u8>, u32>,
    reps: Vec<Vec<BitSet>>,
}

impl PartitionClassIndex {
    /// Unlike subsets, a partition must place every processed vertex, so the
    /// pool of reachable keys is replaced at each vertex rather than grown.
    pub fn build(g: &Graph, side: &BitSet, q: usize, d: usize) -> Result<PartitionClassIndex> {
        let outside: Vec<usize> = side.complement().iter().collect();
        let m = outside.len();
        let mut pool: std::collections::BTreeMap<Vec<u8>, Vec<BitSet>> =
            std::collections::BTreeMap::new();
        pool.insert(vec![0u8; q * m], vec![BitSet::new(g.vertex_count()); q]);
        for x in side.iter() {
            let mut next: std::collections::BTreeMap<Vec<u8>, Vec<BitSet>> =
                std::collections::BTreeMap::new();
            for (key, witness) in &pool {
                for part in 0..q {
                    let mut ext = key.clone();
                    for (ci, &v) in outside.iter().enumerate() {
                        let slot = part * m + ci;
                        if g.row(v).contains(x) && (ext[slot] as usize) < d {
                            ext[slot] += 1;
                        }
                    }
                    if !next.contains_key(&ext) {
                        if next.len() >= MAX_CLASSES {
                            return Err(Error::TooLarge(format!(
                                "more than {MAX_CLASSES} partition classes on one cut side"
                            )));
                        }
                        let mut w2 = witness.clone();
                        w2[part].insert(x);
                        next.insert(ext, w2);
                    }
                }
            }
            pool = next;
        }
        let mut key_of = HashMap::with_capacity(pool.len());
        let mut reps = Vec::with_capacity(pool.len());
        for (key, witness) in pool {
            key_of.insert(key, reps.len() as u32);
            reps.push(witness);
        }
        Ok(PartitionClassIndex {
            outside,
            q,
            d,
            key_of,
            reps,
        })
    }

    pub fn class_count(&self) -> usize {
        self.reps.len()
    }

    pub fn rep(&self, class: u32) -> &[BitSet] {
        &self.reps[class as usize]
    }

    pub fn key_of_partition(&self, g: &Graph, parts: &[BitSet]) -> Vec<u8> {
        debug_assert_eq!(parts.len(), self.q);
        let m = self.outside.len();
        let mut key = vec![0u8; self.q * m];
        for (part, mask) in parts.iter().enumerate() {
            for (ci, &v) in self.outside.iter().enumerate() {
                key[part * m + ci] = g.row(v).intersection_size(mask).min(self.d) as u8;
            }
        }
        key
    }

    pub fn class_of_partition(&self, g: &Graph, parts: &[BitSet]) -> u32 {
        let key = self.key_of_partition(g, parts);
        *self
            .key_of
            .get(&key)
            .expect("every realizable partition key is enumerated")
    }
}

//! Orderly-by-dedup enumeration of connected subcubic graphs.
//!
//! Every connected graph on `n` vertices has a non-cut vertex (a leaf of a
//! spanning tree), so it arises from a connected graph on `n - 1` vertices by
//! adding one vertex joined to 1..=3 vertices of degree below three. Each
//! order is generated from the previous one and deduplicated by canonical
//! form.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::{canonical_form, CanonKey};
use crate::graph::{Graph, Vertex};

/// Largest order the built-in enumerator accepts.
pub const MAX_ENUMERATION_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationError {
    pub requested: usize,
}

impl fmt::Display for EnumerationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "order {} is outside the built-in enumerator range 1..={}; \
             generate larger orders externally and ingest them as graph6",
            self.requested, MAX_ENUMERATION_ORDER
        )
    }
}

impl core::error::Error for EnumerationError {}

fn extend(level: &[Graph]) -> Vec<Graph> {
    let mut seen: BTreeMap<CanonKey, Graph> = BTreeMap::new();
    let mut scratch: Vec<(Vertex, Vertex)> = Vec::new();
    for g in level {
        let n = g.n();
        let free: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) < 3).collect();
        let mut subsets: Vec<Vec<Vertex>> = Vec::new();
        for (i, &a) in free.iter().enumerate() {
            subsets.push(vec![a]);
            for (j, &b) in free.iter().enumerate().skip(i + 1) {
                subsets.push(vec![a, b]);
                for &c in &free[j + 1..] {
                    subsets.push(vec![a, b, c]);
                }
            }
        }
        for s in subsets {
            scratch.clear();
            scratch.extend(g.edges());
            scratch.extend(s.iter().map(|&v| (v, n)));
            let h = Graph::from_edges(n + 1, scratch.iter().copied()).expect("new vertex keeps the graph simple");
            let canon = canonical_form(&h, &vec![0; n + 1]);
            seen.entry(canon.key.clone()).or_insert_with(|| canon.graph(&h));
        }
    }
    seen.into_values().collect()
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices with maximum degree at most three, in canonical-key order.
/// Representatives are canonically labeled.
pub fn enumerate_connected_subcubic(n: usize) -> Result<impl Iterator<Item = Graph>, EnumerationError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(EnumerationError { requested: n });
    }
    let mut level = vec![Graph::empty(1)];
    for _ in 1..n {
        level = extend(&level);
    }
    Ok(level.into_iter())
}

/// All orders `1..=max_n`, smallest first.
pub fn enumerate_up_to(max_n: usize) -> Result<Vec<Graph>, EnumerationError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&max_n) {
        return Err(EnumerationError { requested: max_n });
    }
    let mut all = Vec::new();
    let mut level = vec![Graph::empty(1)];
    all.extend(level.iter().cloned());
    for _ in 1..max_n {
        level = extend(&level);
        all.extend(level.iter().cloned());
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    fn count(n: usize) -> usize {
        enumerate_connected_subcubic(n).unwrap().count()
    }

    #[test]
    fn small_orders() {
        assert_eq!(count(1), 1);
        assert_eq!(count(2), 1);
        assert_eq!(count(3), 2);
        let four: Vec<Graph> = enumerate_connected_subcubic(4).unwrap().collect();
        assert_eq!(four.len(), 6);
        let mut edge_counts: Vec<usize> = four.iter().map(Graph::m).collect();
        edge_counts.sort();
        // P4, K1,3, C4, paw, diamond, K4
        assert_eq!(edge_counts, vec![3, 3, 4, 4, 5, 6]);
        for g in &four {
            assert!(g.is_connected() && g.is_subcubic());
        }
        let p4 = crate::generators::generate(crate::generators::Family::Path(4)).unwrap();
        assert_eq!(four.iter().filter(|g| are_isomorphic(g, &p4)).count(), 1);
    }

    #[test]
    fn refuses_out_of_budget() {
        assert!(enumerate_connected_subcubic(0).is_err());
        assert_eq!(enumerate_connected_subcubic(11).err(), Some(EnumerationError { requested: 11 }));
    }
}

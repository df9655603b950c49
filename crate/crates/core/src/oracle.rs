//! Slow reference implementations used to cross-check the solver.
//!
//! Neither routine shares code with [`crate::solver`]: no domains, no vertex
//! ordering heuristics, no symmetry breaking. Conflicts are read off a
//! precomputed all-pairs distance table.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{all_pairs_distances, Graph};
use crate::packing::{PackingColoring, PackingSpec};

/// Largest `k^n` the exhaustive oracle accepts.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TooLarge {
    pub n: usize,
    pub k: usize,
}

impl fmt::Display for TooLarge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{} assignments exceed the exhaustive oracle limit", self.k, self.n)
    }
}

impl core::error::Error for TooLarge {}

fn conflicts(dist: &[Vec<Option<usize>>], spec: &PackingSpec, classes: &[usize], u: usize, v: usize) -> bool {
    classes[u] == classes[v] && dist[u][v].is_some_and(|d| d <= spec.threshold(classes[u]))
}

/// Walks all `k^n` assignments in lexicographic order and returns the first
/// packing coloring.
pub fn exhaustive_coloring(g: &Graph, spec: &PackingSpec) -> Result<Option<PackingColoring>, TooLarge> {
    let (n, k) = (g.n(), spec.k());
    let too_large = TooLarge { n, k };
    let mut total: u64 = 1;
    for _ in 0..n {
        total = total.checked_mul(k as u64).filter(|&t| t <= EXHAUSTIVE_LIMIT).ok_or(too_large)?;
    }
    let dist = all_pairs_distances(g);
    let mut classes = vec![0usize; n];
    loop {
        let ok = (0..n).all(|v| (0..v).all(|u| !conflicts(&dist, spec, &classes, u, v)));
        if ok {
            return Ok(Some(PackingColoring::total(classes)));
        }
        // Odometer step, last vertex fastest.
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            classes[i] += 1;
            if classes[i] < k {
                break;
            }
            classes[i] = 0;
        }
    }
}

/// Chronological backtracking in vertex-id order, each new class checked
/// against every earlier vertex.
pub fn backtrack_coloring(g: &Graph, spec: &PackingSpec) -> Option<PackingColoring> {
    let n = g.n();
    let dist = all_pairs_distances(g);
    let mut classes = vec![0usize; n];
    let mut v = 0;
    let mut fresh = true;
    loop {
        if v == n {
            return Some(PackingColoring::total(classes));
        }
        if !fresh {
            classes[v] += 1;
        }
        while classes[v] < spec.k() && (0..v).any(|u| conflicts(&dist, spec, &classes, u, v)) {
            classes[v] += 1;
        }
        if classes[v] < spec.k() {
            v += 1;
            if v < n {
                classes[v] = 0;
            }
            fresh = true;
        } else {
            if v == 0 {
                return None;
            }
            v -= 1;
            fresh = false;
        }
    }
}

/// Least `k <= k_max` with a packing `(1, ..., k)`-coloring, by
/// [`backtrack_coloring`].
pub fn backtrack_chi_p(g: &Graph, k_max: usize) -> Option<usize> {
    (1..=k_max).find(|&k| backtrack_coloring(g, &PackingSpec::increasing(k).expect("k >= 1")).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, Family};
    use crate::packing::verify_coloring;

    #[test]
    fn oracles_agree_on_small_cases() {
        let s1122 = PackingSpec::one_one_two_two();
        for g in [
            generate(Family::Cycle(5)).unwrap(),
            generate(Family::Complete(4)).unwrap(),
            generate(Family::Prism(3)).unwrap(),
        ] {
            let a = exhaustive_coloring(&g, &s1122).unwrap();
            let b = backtrack_coloring(&g, &s1122);
            assert_eq!(a.is_some(), b.is_some());
            for c in a.iter().chain(b.iter()) {
                assert!(verify_coloring(&g, &s1122, c).unwrap().is_empty());
            }
        }
        // K4 needs four 1-classes.
        assert!(backtrack_coloring(&generate(Family::Complete(4)).unwrap(), &"1,1,2".parse().unwrap()).is_none());
    }

    #[test]
    fn limits() {
        let g = Graph::empty(14);
        assert_eq!(exhaustive_coloring(&g, &PackingSpec::one_one_two_two()), Err(TooLarge { n: 14, k: 4 }));
        assert!(exhaustive_coloring(&Graph::empty(0), &PackingSpec::one_one_two_two()).unwrap().is_some());
        assert_eq!(backtrack_chi_p(&Graph::empty(0), 3), Some(1));
        assert_eq!(backtrack_chi_p(&generate(Family::Path(4)).unwrap(), 5), Some(3));
    }
}

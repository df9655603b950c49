use packcolor_core::canon::canonical_key;
use packcolor_core::enumerate::{enumerate_connected_subcubic, enumerate_up_to};
use packcolor_core::graph::Graph;
use std::collections::BTreeSet;

// Connected graphs with maximum degree at most 3, by order (OEIS A112410).
const COUNTS: [usize; 10] = [1, 1, 2, 6, 10, 29, 64, 194, 531, 1733];

#[test]
fn counts_match_known_sequence() {
    for (i, &want) in COUNTS.iter().enumerate() {
        let n = i + 1;
        let got: Vec<Graph> = enumerate_connected_subcubic(n).unwrap().collect();
        assert_eq!(got.len(), want, "order {n}");
        for g in &got {
            assert_eq!(g.n(), n);
            assert!(g.is_connected() && g.is_subcubic());
        }
    }
}

#[test]
fn representatives_are_pairwise_non_isomorphic() {
    let all = enumerate_up_to(8).unwrap();
    let keys: BTreeSet<_> = all.iter().map(canonical_key).collect();
    assert_eq!(keys.len(), all.len());
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

// Brute-force isomorphism over all vertex permutations, independent of the
// canonical labeling code.
fn brute_isomorphic(g: &Graph, h: &Graph, perms: &[Vec<usize>]) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    perms.iter().any(|p| g.edges().all(|(u, v)| h.has_edge(p[u], p[v])))
}

#[test]
fn no_duplicates_by_brute_force_up_to_six() {
    for n in 1..=6 {
        let perms = permutations(n);
        let level: Vec<Graph> = enumerate_connected_subcubic(n).unwrap().collect();
        for i in 0..level.len() {
            for j in i + 1..level.len() {
                assert!(!brute_isomorphic(&level[i], &level[j], &perms), "order {n}: {i} ~ {j}");
            }
        }
    }
}

#[test]
fn output_order_is_deterministic() {
    let a: Vec<Graph> = enumerate_connected_subcubic(7).unwrap().collect();
    let b: Vec<Graph> = enumerate_connected_subcubic(7).unwrap().collect();
    assert_eq!(a, b);
}

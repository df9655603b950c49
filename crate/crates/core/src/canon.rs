//! Canonical labeling for small vertex-colored graphs.
//!
//! Degree-style equitable refinement, then individualization of each vertex
//! of the first smallest non-singleton cell, recursively. Every discrete
//! partition reached gives a labeling; the lexicographically largest
//! adjacency string over all of them is the canonical form. There is no
//! automorphism pruning, so cost grows with the automorphism group. That is
//! fine for the subcubic graphs and local configurations handled here.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};

/// Isomorphism-invariant key: equal keys iff the colored graphs are
/// isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonKey {
    n: usize,
    colors: Vec<u32>,
    bits: Vec<u64>,
}

#[derive(Debug, Clone)]
pub struct Canonical {
    pub key: CanonKey,
    /// `labeling[v]` is the canonical label of vertex `v`.
    pub labeling: Vec<Vertex>,
}

impl Canonical {
    pub fn graph(&self, g: &Graph) -> Graph {
        g.relabel(&self.labeling)
    }
}

type Cells = Vec<Vec<Vertex>>;

fn refine(g: &Graph, cells: &mut Cells, cell_of: &mut [usize]) {
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut next: Cells = Vec::with_capacity(cells.len());
        let mut split = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, Vertex)> = cell
                .iter()
                .map(|&v| {
                    let mut sig: Vec<usize> = g.neighbors(v).iter().map(|&w| cell_of[w]).collect();
                    sig.sort_unstable();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    split |= start > 0 || i < keyed.len();
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        *cells = next;
        if !split {
            return;
        }
    }
}

fn leaf_key(g: &Graph, colors: &[u32], cells: &Cells) -> (CanonKey, Vec<Vertex>) {
    let n = g.n();
    let mut labeling = vec![0; n];
    let mut order = Vec::with_capacity(n);
    for (i, cell) in cells.iter().enumerate() {
        labeling[cell[0]] = i;
        order.push(cell[0]);
    }
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                bits[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    let colors = order.iter().map(|&v| colors[v]).collect();
    (CanonKey { n, colors, bits }, labeling)
}

fn search(g: &Graph, colors: &[u32], mut cells: Cells, best: &mut Option<(CanonKey, Vec<Vertex>)>) {
    let mut cell_of = vec![0; g.n()];
    refine(g, &mut cells, &mut cell_of);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    let Some(t) = target else {
        let (key, labeling) = leaf_key(g, colors, &cells);
        if best.as_ref().is_none_or(|(k, _)| key > *k) {
            *best = Some((key, labeling));
        }
        return;
    };
    for idx in 0..cells[t].len() {
        let mut branch = cells.clone();
        let mut rest = branch[t].clone();
        let v = rest.remove(idx);
        branch[t] = rest;
        branch.insert(t, vec![v]);
        search(g, colors, branch, best);
    }
}

/// Canonical form of `g` with vertex colors `colors` (one per vertex).
/// Isomorphisms must preserve colors.
pub fn canonical_form(g: &Graph, colors: &[u32]) -> Canonical {
    assert_eq!(colors.len(), g.n());
    let mut palette: Vec<u32> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let cells: Cells = palette
        .iter()
        .map(|&c| g.vertices().filter(|&v| colors[v] == c).collect())
        .collect();
    let mut best = None;
    if g.n() == 0 {
        return Canonical {
            key: CanonKey { n: 0, colors: Vec::new(), bits: Vec::new() },
            labeling: Vec::new(),
        };
    }
    search(g, colors, cells, &mut best);
    let (key, labeling) = best.expect("search reaches at least one leaf");
    Canonical { key, labeling }
}

pub fn canonical_key(g: &Graph) -> CanonKey {
    canonical_form(g, &vec![0; g.n()]).key
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.m() == h.m() && canonical_key(g) == canonical_key(h)
}

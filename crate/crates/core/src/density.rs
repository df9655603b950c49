//! Maximum average degree.
//!
//! `mad(G)` is the largest `2|E(G[S])| / |S|` over nonempty vertex sets `S`.
//! Every such value is a fraction with denominator at most `n`, and two
//! distinct fractions of that kind differ by at least `1/n^2`. So it is
//! enough to binary search `k` over the grid `k/n^2` for the first point at
//! which no set is denser, then snap to the unique small-denominator
//! fraction just below it.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::flow::FlowNetwork;
use crate::graph::{Graph, Vertex};
use crate::rational::Rational;

/// Largest order accepted by [`mad_bruteforce`].
pub const BRUTEFORCE_MAX_ORDER: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DensityError {
    EmptyGraph,
    TooLarge { n: usize, max: usize },
    /// Flow capacities would overflow 64-bit integers.
    Overflow,
    GirthTooSmall(usize),
}

impl fmt::Display for DensityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DensityError::EmptyGraph => f.write_str("maximum average degree of the empty graph is undefined"),
            DensityError::TooLarge { n, max } => write!(f, "brute force limited to {max} vertices, got {n}"),
            DensityError::Overflow => f.write_str("graph too large for exact density computation"),
            DensityError::GirthTooSmall(g) => write!(f, "girth must be at least 3, got {g}"),
        }
    }
}

impl core::error::Error for DensityError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mad {
    pub value: Rational,
    /// A vertex set whose induced subgraph attains `value`, sorted.
    pub witness: Vec<Vertex>,
}

/// Is there a nonempty `S` with `2|E(S)| > lambda |S|`, where
/// `lambda = num / scale`? Returns such a set if so.
///
/// Max-weight closure: an edge node worth `2 * scale` requires both of its
/// endpoints, each costing `num`.
fn denser_than(g: &Graph, num: i64, scale: i64) -> Option<Vec<Vertex>> {
    let m = g.m();
    let n = g.n();
    let (s, t) = (0, 1);
    let mut net = FlowNetwork::new(2 + m + n);
    let profit = 2 * scale;
    let infinite = profit * m as i64 + 1;
    for (i, (u, v)) in g.edges().enumerate() {
        net.add_arc(s, 2 + i, profit);
        net.add_arc(2 + i, 2 + m + u, infinite);
        net.add_arc(2 + i, 2 + m + v, infinite);
    }
    for v in 0..n {
        net.add_arc(2 + m + v, t, num);
    }
    let flow = net.max_flow(s, t);
    if profit * m as i64 - flow <= 0 {
        return None;
    }
    let side = net.source_side(s);
    Some((0..n).filter(|&v| side[2 + m + v]).collect())
}

fn induced_edges(g: &Graph, set: &[Vertex]) -> usize {
    let mut inside = vec![false; g.n()];
    set.iter().for_each(|&v| inside[v] = true);
    set.iter().map(|&v| g.neighbors(v).iter().filter(|&&w| inside[w]).count()).sum::<usize>() / 2
}

/// Exact maximum average degree with a maximizing vertex set.
pub fn mad_exact(g: &Graph) -> Result<Mad, DensityError> {
    let n = g.n();
    if n == 0 {
        return Err(DensityError::EmptyGraph);
    }
    if g.m() == 0 {
        return Ok(Mad { value: Rational::ZERO, witness: vec![0] });
    }
    let scale = i64::try_from(n * n).map_err(|_| DensityError::Overflow)?;
    let delta = g.max_degree() as i64;
    scale
        .checked_mul(2 * g.m() as i64 + 1)
        .and_then(|x| x.checked_mul(2))
        .and_then(|_| delta.checked_mul(scale))
        .ok_or(DensityError::Overflow)?;

    // Smallest k with no set denser than k / scale. k = delta * scale always
    // qualifies and k = 0 never does, since the graph has an edge.
    let (mut lo, mut hi) = (0, delta * scale);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if denser_than(g, mid, scale).is_some() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let witness = denser_than(g, lo, scale).expect("lower end of the search is feasible");
    let value = Rational::new(2 * induced_edges(g, &witness) as i64, witness.len() as i64);
    debug_assert!(value <= Rational::new(hi, scale) && value > Rational::new(lo, scale));
    Ok(Mad { value, witness })
}

/// Exhaustive maximum over all nonempty vertex subsets.
pub fn mad_bruteforce(g: &Graph) -> Result<Rational, DensityError> {
    let n = g.n();
    if n == 0 {
        return Err(DensityError::EmptyGraph);
    }
    if n > BRUTEFORCE_MAX_ORDER {
        return Err(DensityError::TooLarge { n, max: BRUTEFORCE_MAX_ORDER });
    }
    let nbr: Vec<u32> = g.vertices().map(|v| g.neighbors(v).iter().fold(0, |acc, &w| acc | 1 << w)).collect();
    // edges[S] = edges[S - low] + |N(low) & S|
    let mut edges = vec![0u16; 1 << n];
    let mut best = Rational::ZERO;
    for set in 1u32..(1 << n) {
        let low = set.trailing_zeros() as usize;
        let rest = set & (set - 1);
        let e = edges[rest as usize] + (nbr[low] & rest).count_ones() as u16;
        edges[set as usize] = e;
        let d = Rational::new(2 * e as i64, set.count_ones() as i64);
        if d > best {
            best = d;
        }
    }
    Ok(best)
}

/// `2g / (g - 2)`: planar graphs of girth at least `g` have smaller mad.
pub fn planar_mad_bound(girth: usize) -> Result<Rational, DensityError> {
    if girth < 3 {
        return Err(DensityError::GirthTooSmall(girth));
    }
    Ok(Rational::new(2 * girth as i64, girth as i64 - 2))
}

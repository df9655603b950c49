//! Exact packing-coloring search.
//!
//! Depth-first over a static vertex order (higher degree first, then lower
//! id), classes in ascending order, with forward checking: assigning class
//! `c` to `v` removes `c` from the domain of every unassigned vertex within
//! distance `s_c` of `v`. Among classes with equal thresholds, a class may
//! only be opened once every lower-indexed class with that threshold is in
//! use.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{ball, Graph, Vertex};
use crate::packing::{PackingColoring, PackingSpec};

pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Domains are bit sets.
pub const MAX_CLASSES: usize = 64;

/// Optional randomized restarts: ties in the vertex order are shuffled with
/// a seeded generator, and each restart doubles the per-run budget until the
/// overall budget is spent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Restarts {
    pub seed: u64,
    pub first_run_budget: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Maximum number of class assignments tried.
    pub budget: u64,
    pub restarts: Option<Restarts>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { budget: DEFAULT_BUDGET, restarts: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Colored(PackingColoring),
    Unsatisfiable,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub outcome: SolveOutcome,
    pub decisions: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    TooManyClasses(usize),
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::TooManyClasses(k) => write!(f, "solver supports at most {MAX_CLASSES} classes, got {k}"),
        }
    }
}

impl core::error::Error for SolveError {}

struct Search<'a> {
    spec: &'a PackingSpec,
    order: Vec<Vertex>,
    /// Per vertex: other vertices within the largest threshold, with
    /// distances.
    balls: Vec<Vec<(Vertex, usize)>>,
    /// For each class, the lower-indexed class with the same threshold, if
    /// any.
    twin_below: Vec<Option<usize>>,
}

enum RunEnd {
    Colored(Vec<usize>),
    Unsatisfiable,
    OutOfBudget,
}

impl<'a> Search<'a> {
    fn new(g: &Graph, spec: &'a PackingSpec, order: Vec<Vertex>) -> Self {
        let radius = spec.max_threshold();
        let balls = g.vertices().map(|v| ball(g, v, radius).into_iter().skip(1).collect()).collect();
        let s = spec.thresholds();
        let twin_below = (0..s.len()).map(|c| (c > 0 && s[c - 1] == s[c]).then(|| c - 1)).collect();
        Search { spec, order, balls, twin_below }
    }

    fn run(&self, budget: u64, decisions: &mut u64) -> RunEnd {
        let n = self.order.len();
        let k = self.spec.k();
        let full: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        let mut domain = vec![full; n];
        let mut assigned: Vec<Option<usize>> = vec![None; n];
        let mut used = vec![0usize; k];
        let mut trail: Vec<(Vertex, usize)> = Vec::new();
        let mut mark = vec![0usize; n + 1];
        let mut cursor = vec![0usize; n + 1];
        let mut level = 0;
        loop {
            if level == n {
                return RunEnd::Colored(assigned.into_iter().map(|c| c.expect("all assigned")).collect());
            }
            let v = self.order[level];
            if let Some(c) = assigned[v].take() {
                for (w, bit) in trail.drain(mark[level]..) {
                    domain[w] |= 1 << bit;
                }
                used[c] -= 1;
            }
            let next = (cursor[level]..k).find(|&c| {
                domain[v] & (1 << c) != 0 && self.twin_below[c].is_none_or(|t| used[t] > 0 || used[c] > 0)
            });
            let Some(c) = next else {
                cursor[level] = 0;
                if level == 0 {
                    return RunEnd::Unsatisfiable;
                }
                level -= 1;
                continue;
            };
            cursor[level] = c + 1;
            *decisions += 1;
            if *decisions > budget {
                return RunEnd::OutOfBudget;
            }
            mark[level] = trail.len();
            assigned[v] = Some(c);
            used[c] += 1;
            let reach = self.spec.threshold(c);
            let mut wiped = false;
            for &(w, d) in &self.balls[v] {
                if d <= reach && assigned[w].is_none() && domain[w] & (1 << c) != 0 {
                    domain[w] &= !(1 << c);
                    trail.push((w, c));
                    if domain[w] == 0 {
                        wiped = true;
                        break;
                    }
                }
            }
            if !wiped {
                level += 1;
                cursor[level] = 0;
            }
        }
    }
}

fn static_order(g: &Graph) -> Vec<Vertex> {
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    order
}

/// Searches for a packing `spec`-coloring of `g`. Deterministic for fixed
/// inputs and options.
pub fn solve(g: &Graph, spec: &PackingSpec, options: &SolveOptions) -> Result<Solution, SolveError> {
    if spec.k() > MAX_CLASSES {
        return Err(SolveError::TooManyClasses(spec.k()));
    }
    let mut decisions = 0;
    let finish = |end: RunEnd, decisions: u64| {
        let outcome = match end {
            RunEnd::Colored(classes) => SolveOutcome::Colored(PackingColoring::total(classes)),
            RunEnd::Unsatisfiable => SolveOutcome::Unsatisfiable,
            RunEnd::OutOfBudget => SolveOutcome::BudgetExceeded,
        };
        Solution { outcome, decisions }
    };
    let Some(restarts) = options.restarts else {
        let end = Search::new(g, spec, static_order(g)).run(options.budget, &mut decisions);
        return Ok(finish(end, decisions));
    };
    let mut rng = ChaCha8Rng::seed_from_u64(restarts.seed);
    let mut run_budget = restarts.first_run_budget.max(1);
    loop {
        let mut order = static_order(g);
        for group in order.chunk_by_mut(|&a, &b| g.degree(a) == g.degree(b)) {
            group.shuffle(&mut rng);
        }
        let remaining = options.budget - decisions;
        let limit = run_budget.min(remaining);
        let mut spent = 0;
        let end = Search::new(g, spec, order).run(limit, &mut spent);
        decisions += spent.min(limit);
        match end {
            RunEnd::OutOfBudget if decisions < options.budget => run_budget = run_budget.saturating_mul(2),
            end => return Ok(finish(end, decisions)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChiOutcome {
    Exact { k: usize, coloring: PackingColoring },
    /// No packing `(1, ..., k)`-coloring for any `k <= k_max`.
    ExceedsBudget,
    /// The solver ran out of decisions while deciding `k`.
    SolverBudget { k: usize },
}

/// Packing chromatic number: the least `k <= k_max` with a packing
/// `(1, 2, ..., k)`-coloring.
pub fn chi_p(g: &Graph, k_max: usize, options: &SolveOptions) -> Result<ChiOutcome, SolveError> {
    for k in 1..=k_max {
        let spec = PackingSpec::increasing(k).expect("k >= 1");
        match solve(g, &spec, options)?.outcome {
            SolveOutcome::Colored(coloring) => return Ok(ChiOutcome::Exact { k, coloring }),
            SolveOutcome::Unsatisfiable => {}
            SolveOutcome::BudgetExceeded => return Ok(ChiOutcome::SolverBudget { k }),
        }
    }
    Ok(ChiOutcome::ExceedsBudget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, Family};
    use crate::graph::subdivide;
    use crate::packing::verify_coloring;

    fn outcome(g: &Graph, spec: &str) -> SolveOutcome {
        let spec: PackingSpec = spec.parse().unwrap();
        let sol = solve(g, &spec, &SolveOptions::default()).unwrap();
        if let SolveOutcome::Colored(c) = &sol.outcome {
            assert!(verify_coloring(g, &spec, c).unwrap().is_empty());
        }
        sol.outcome
    }

    #[test]
    fn petersen_is_not_one_one_two_two() {
        let pet = generate(Family::Petersen).unwrap();
        assert_eq!(outcome(&pet, "1,1,2,2"), SolveOutcome::Unsatisfiable);
    }

    #[test]
    fn satisfiable_examples() {
        let c4 = generate(Family::Cycle(4)).unwrap();
        assert!(matches!(outcome(&c4, "1,1"), SolveOutcome::Colored(_)));
        let dk4 = subdivide(&generate(Family::Complete(4)).unwrap()).graph;
        assert!(matches!(outcome(&dk4, "1,1,2,2"), SolveOutcome::Colored(_)));
        let c5 = generate(Family::Cycle(5)).unwrap();
        assert_eq!(outcome(&c5, "1,1"), SolveOutcome::Unsatisfiable);
    }

    #[test]
    fn chi_examples() {
        let opts = SolveOptions::default();
        let k1 = generate(Family::Path(1)).unwrap();
        assert!(matches!(chi_p(&k1, 5, &opts).unwrap(), ChiOutcome::Exact { k: 1, .. }));
        let p4 = generate(Family::Path(4)).unwrap();
        assert!(matches!(chi_p(&p4, 5, &opts).unwrap(), ChiOutcome::Exact { k: 3, .. }));
        let c4 = generate(Family::Cycle(4)).unwrap();
        assert!(matches!(chi_p(&c4, 5, &opts).unwrap(), ChiOutcome::Exact { k: 3, .. }));
        assert_eq!(chi_p(&c4, 2, &opts).unwrap(), ChiOutcome::ExceedsBudget);
    }

    #[test]
    fn budget_is_reported() {
        let pet = generate(Family::Petersen).unwrap();
        let opts = SolveOptions { budget: 3, restarts: None };
        let sol = solve(&pet, &PackingSpec::one_one_two_two(), &opts).unwrap();
        assert_eq!(sol.outcome, SolveOutcome::BudgetExceeded);
    }

    #[test]
    fn restarts_agree_with_the_default_search() {
        let opts = SolveOptions { budget: 1_000_000, restarts: Some(Restarts { seed: 7, first_run_budget: 4 }) };
        let pet = generate(Family::Petersen).unwrap();
        let spec = PackingSpec::one_one_two_two();
        assert_eq!(solve(&pet, &spec, &opts).unwrap().outcome, SolveOutcome::Unsatisfiable);
        let prism = generate(Family::Prism(5)).unwrap();
        let SolveOutcome::Colored(c) = solve(&prism, &spec, &opts).unwrap().outcome else { panic!() };
        assert!(verify_coloring(&prism, &spec, &c).unwrap().is_empty());
        assert_eq!(solve(&prism, &spec, &opts), solve(&prism, &spec, &opts));
    }

    #[test]
    fn too_many_classes() {
        let spec = PackingSpec::new(vec![1; 65]).unwrap();
        assert_eq!(
            solve(&Graph::empty(1), &spec, &SolveOptions::default()),
            Err(SolveError::TooManyClasses(65))
        );
    }
}

//! The fast routines against their slow references.

use packcolor_core::density::{mad_bruteforce, mad_exact};
use packcolor_core::enumerate::enumerate_up_to;
use packcolor_core::generators::{generate, random_subcubic, Family};
use packcolor_core::oracle::{backtrack_chi_p, backtrack_coloring, exhaustive_coloring};
use packcolor_core::packing::{verify_coloring, PackingSpec};
use packcolor_core::solver::{chi_p, solve, ChiOutcome, SolveOptions, SolveOutcome};
use packcolor_core::{Graph, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn density(g: &Graph, set: &[usize]) -> Rational {
    let inside = |v: &usize| set.contains(v);
    let e = g.edges().filter(|(u, v)| inside(u) && inside(v)).count();
    Rational::new(2 * e as i64, set.len() as i64)
}

fn check_mad(g: &Graph) {
    let m = mad_exact(g).unwrap();
    assert_eq!(m.value, mad_bruteforce(g).unwrap(), "{:?}", g);
    assert_eq!(density(g, &m.witness), m.value);
}

#[test]
fn mad_matches_brute_force_on_the_enumeration() {
    let all = enumerate_up_to(10).unwrap();
    assert_eq!(all.len(), 2571);
    all.iter().for_each(check_mad);
}

#[test]
fn mad_matches_brute_force_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d6164);
    for _ in 0..200 {
        let n = rng.gen_range(1..=16);
        let attempts = rng.gen_range(n..=3 * n);
        check_mad(&random_subcubic(&mut rng, n, attempts));
    }
}

fn verdict(outcome: &SolveOutcome) -> bool {
    match outcome {
        SolveOutcome::Colored(_) => true,
        SolveOutcome::Unsatisfiable => false,
        SolveOutcome::BudgetExceeded => panic!("budget exit on a small graph"),
    }
}

#[test]
fn solver_matches_exhaustive_search_up_to_seven_vertices() {
    let specs: Vec<PackingSpec> = ["1,1", "1,2", "1,1,2,2"].iter().map(|s| s.parse().unwrap()).collect();
    let graphs = enumerate_up_to(7).unwrap();
    assert_eq!(graphs.len(), 113);
    for g in &graphs {
        for spec in &specs {
            let fast = solve(g, spec, &SolveOptions::default()).unwrap();
            let slow = exhaustive_coloring(g, spec).unwrap();
            assert_eq!(verdict(&fast.outcome), slow.is_some(), "{spec} on {g:?}");
            if let SolveOutcome::Colored(c) = &fast.outcome {
                assert!(verify_coloring(g, spec, c).unwrap().is_empty());
            }
        }
    }
}

#[test]
fn solver_matches_backtracking_on_random_graphs() {
    let specs: Vec<PackingSpec> = ["1,1,2,2", "1,1,2", "1,2,2,2"].iter().map(|s| s.parse().unwrap()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1122);
    let mut seen = [0usize; 2];
    for _ in 0..150 {
        let n = rng.gen_range(4..=14);
        let g = random_subcubic(&mut rng, n, 4 * n);
        for spec in &specs {
            let fast = solve(&g, spec, &SolveOptions::default()).unwrap();
            let slow = backtrack_coloring(&g, spec);
            assert_eq!(verdict(&fast.outcome), slow.is_some(), "{spec} on {g:?}");
            seen[usize::from(slow.is_some())] += 1;
        }
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
    let petersen = generate(Family::Petersen).unwrap();
    assert!(backtrack_coloring(&petersen, &specs[0]).is_none());
}

#[test]
fn cycle_packing_chromatic_numbers() {
    for n in 3..=20 {
        let c = generate(Family::Cycle(n)).unwrap();
        let ChiOutcome::Exact { k, coloring } = chi_p(&c, 6, &SolveOptions::default()).unwrap() else {
            panic!("cycle {n} not settled");
        };
        assert_eq!(Some(k), backtrack_chi_p(&c, 6), "C{n}");
        assert!(verify_coloring(&c, &PackingSpec::increasing(k).unwrap(), &coloring).unwrap().is_empty());
        // Known closed form: 3 when n = 3 or 4 | n, otherwise 4.
        assert_eq!(k, if n == 3 || n % 4 == 0 { 3 } else { 4 }, "C{n}");
    }
}

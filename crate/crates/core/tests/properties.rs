use packcolor_core::canon::canonical_key;
use packcolor_core::density::{mad_bruteforce, mad_exact};
use packcolor_core::discharge::{apply_discharging, initial_charges};
use packcolor_core::generators::random_subcubic;
use packcolor_core::graph::{all_pairs_distances, subdivide};
use packcolor_core::graph6::{parse_graph6, write_graph6};
use packcolor_core::packing::{verify_coloring, PackingSpec};
use packcolor_core::solver::{solve, SolveOptions, SolveOutcome};
use packcolor_core::{Graph, Rational};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn subcubic(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), 0usize..4).prop_map(|(n, seed, fill)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_subcubic(&mut rng, n, (fill + 1) * n)
    })
}

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len)
            .prop_map(move |keep| Graph::from_edges(n, pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e)).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn mad_exact_equals_brute_force(g in subcubic(14)) {
        prop_assert_eq!(mad_exact(&g).unwrap().value, mad_bruteforce(&g).unwrap());
    }

    #[test]
    fn adding_an_edge_never_lowers_mad(g in subcubic(14), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let (u, v) = (a.index(g.n()), b.index(g.n()));
        prop_assume!(u != v && !g.has_edge(u, v));
        let h = Graph::from_edges(g.n(), g.edges().chain([(u.min(v), u.max(v))])).unwrap();
        prop_assert!(mad_exact(&h).unwrap().value >= mad_exact(&g).unwrap().value);
    }

    #[test]
    fn mad_bounds(g in subcubic(24)) {
        let m = mad_exact(&g).unwrap().value;
        prop_assert!(m >= Rational::new(2 * g.m() as i64, g.n() as i64));
        prop_assert!(m <= Rational::integer(g.max_degree() as i64));
    }

    #[test]
    fn graph6_round_trips(g in any_graph(20)) {
        let text = write_graph6(&g);
        prop_assert_eq!(parse_graph6(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn canonical_key_ignores_labels(g in subcubic(12), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = g.vertices().collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(canonical_key(&g), canonical_key(&g.relabel(&perm)));
    }

    #[test]
    fn solver_colorings_verify_and_survive_swaps(g in subcubic(18)) {
        let spec = PackingSpec::one_one_two_two();
        let out = solve(&g, &spec, &SolveOptions::default()).unwrap().outcome;
        prop_assert!(out != SolveOutcome::BudgetExceeded);
        if let SolveOutcome::Colored(c) = out {
            prop_assert!(verify_coloring(&g, &spec, &c).unwrap().is_empty());
            prop_assert!(verify_coloring(&g, &spec, &c.map_classes(&[1, 0, 3, 2])).unwrap().is_empty());
        }
    }

    #[test]
    fn charge_totals(g in subcubic(30)) {
        let initial = initial_charges(&g);
        let expected = Rational::integer(2 * g.m() as i64) - Rational::new(30 * g.n() as i64, 11);
        prop_assert_eq!(initial.total(), expected);
        prop_assert_eq!(apply_discharging(&g, &initial).unwrap().total(), expected);
    }

    #[test]
    fn subdivision_doubles_distances(g in subcubic(12)) {
        let d = subdivide(&g).graph;
        let (a, b) = (all_pairs_distances(&g), all_pairs_distances(&d));
        for u in g.vertices() {
            for v in g.vertices() {
                prop_assert_eq!(b[u][v], a[u][v].map(|x| 2 * x));
            }
        }
    }

    #[test]
    fn rational_field_laws(p in -50i64..50, q in 1i64..50, r in -50i64..50, s in 1i64..50) {
        let (x, y) = (Rational::new(p, q), Rational::new(r, s));
        prop_assert_eq!(x + y - y, x);
        prop_assert_eq!((x + y) * Rational::integer(2), x + x + y + y);
        if r != 0 {
            prop_assert_eq!(x * y / y, x);
        }
        prop_assert_eq!(x < y, (p * s) < (r * q));
    }
}

use packcolor_core::enumerate::{enumerate_connected_subcubic, enumerate_up_to};
use packcolor_core::generators::{generate, random_subcubic, Family};
use packcolor_core::graph::{all_pairs_distances, girth, subdivide, Girth};
use packcolor_core::graph6::{parse_graph6, write_graph6};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn graph6_round_trip_on_the_enumeration() {
    for g in enumerate_up_to(7).unwrap() {
        let text = write_graph6(&g);
        let back = parse_graph6(text.as_bytes()).unwrap();
        back.validate().unwrap();
        assert_eq!(back, g);
        assert_eq!(write_graph6(&back), text);
    }
}

#[test]
fn enumerated_graphs_validate() {
    for n in 1..=8 {
        for g in enumerate_connected_subcubic(n).unwrap() {
            g.validate().unwrap();
            assert!(g.is_connected() && g.is_subcubic() && g.n() == n);
        }
    }
}

#[test]
fn subdivision_doubles_distances() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..50 {
        let n = 3 + i % 12;
        let g = random_subcubic(&mut rng, n, 2 * n);
        let d = subdivide(&g);
        assert_eq!(d.graph.n(), g.n() + g.m());
        assert_eq!(d.graph.m(), 2 * g.m());
        assert_eq!(d.original_n(), g.n());
        let before = all_pairs_distances(&g);
        let after = all_pairs_distances(&d.graph);
        for u in g.vertices() {
            for v in g.vertices() {
                assert_eq!(after[u][v], before[u][v].map(|x| 2 * x));
            }
        }
        for x in g.n()..d.graph.n() {
            assert_eq!(d.graph.degree(x), 2);
            assert!(d.graph.neighbors(x).iter().all(|&w| w < g.n()));
        }
        let doubled = match girth(&g) {
            Girth::Finite(k) => Girth::Finite(2 * k),
            Girth::Acyclic => Girth::Acyclic,
        };
        assert_eq!(girth(&d.graph), doubled);
    }
}

#[test]
fn girth_of_named_graphs() {
    assert_eq!(girth(&generate(Family::Petersen).unwrap()), Girth::Finite(5));
    assert_eq!(girth(&generate(Family::Prism(4)).unwrap()), Girth::Finite(4));
    assert_eq!(girth(&subdivide(&generate(Family::Prism(4)).unwrap()).graph), Girth::Finite(8));
    assert_eq!(girth(&generate(Family::Path(5)).unwrap()), Girth::Acyclic);
}

use packcolor_core::density::mad_exact;
use packcolor_core::discharge::*;
use packcolor_core::enumerate::enumerate_up_to;
use packcolor_core::generators::{generate, random_subcubic, Family};
use packcolor_core::graph::subdivide;
use packcolor_core::{Graph, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn conserved(g: &Graph) {
    let initial = initial_charges(g);
    let expected = Rational::integer(2 * g.m() as i64) - Rational::new(30 * g.n() as i64, 11);
    assert_eq!(initial.total(), expected);
    let fin = apply_discharging(g, &initial).unwrap();
    assert_eq!(fin.total(), initial.total());
    assert_eq!(fin.stage, Stage::Final);
}

#[test]
fn charge_is_conserved() {
    enumerate_up_to(8).unwrap().iter().for_each(conserved);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..60 {
        conserved(&random_subcubic(&mut rng, n, 2 * n));
    }
}

#[test]
fn closing_arithmetic() {
    let two = Rational::integer(2) - THRESHOLD + R2_AMOUNT + R2_AMOUNT + R1_AMOUNT + R1_AMOUNT;
    assert_eq!(two, Rational::ZERO);
    let three = Rational::integer(3) - THRESHOLD - R2_AMOUNT.max(R1_AMOUNT + R1_AMOUNT + R1_AMOUNT);
    assert_eq!(three, Rational::ZERO);
    assert_eq!(two_vertex_closing_charge(), Rational::ZERO);
    assert_eq!(three_vertex_closing_charge(), Rational::ZERO);
}

#[test]
fn petersen_charges() {
    let p = generate(Family::Petersen).unwrap();
    let initial = initial_charges(&p);
    assert!(initial.charges.iter().all(|&c| c == Rational::new(3, 11)));
    assert_eq!(initial.total(), Rational::new(30, 11));
    let fin = apply_discharging(&p, &initial).unwrap();
    assert!(fin.transfers.is_empty());
    assert_eq!(fin.min_charge(), Some(Rational::new(3, 11)));
}

#[test]
fn subdivided_k4_breaks_two_neighbor() {
    let d = subdivide(&generate(Family::Complete(4)).unwrap()).graph;
    assert_eq!(initial_charges(&d).total(), Rational::new(-36, 11));
    let r = structural_audit(&d).unwrap();
    assert!(!r.two_neighbor_ok());
    assert!(r.min_degree_ok() && r.no_adjacent_2_ok());
}

#[test]
fn structured_graphs_are_dense_and_nonnegative() {
    let mut structured = 0;
    for g in enumerate_up_to(9).unwrap() {
        let r = structural_audit(&g).unwrap();
        if !r.all_ok() {
            continue;
        }
        structured += 1;
        let fin = apply_discharging(&g, &initial_charges(&g)).unwrap();
        assert!(fin.min_charge().unwrap() >= Rational::ZERO);
        assert!(mad_exact(&g).unwrap().value >= THRESHOLD);
    }
    assert!(structured > 0);
}

#[test]
fn ledger_errors() {
    let p = generate(Family::Petersen).unwrap();
    let fin = apply_discharging(&p, &initial_charges(&p)).unwrap();
    assert!(matches!(apply_discharging(&p, &fin), Err(DischargeError::StageMismatch { .. })));
    let small = initial_charges(&generate(Family::Cycle(3)).unwrap());
    assert!(matches!(apply_discharging(&p, &small), Err(DischargeError::SizeMismatch { graph: 10, ledger: 3 })));
}

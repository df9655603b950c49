//! Charges `d(v) - 30/11`, the two redistribution rules, and the structural
//! predicates that make every final charge nonnegative.
//!
//! * R1: a special 3-vertex gives 1/11 to each 2-vertex at distance exactly
//!   two (each such vertex once, however many paths reach it).
//! * R2: a non-special 3-vertex gives 3/11 to each 2-neighbor.
//!
//! A 3-vertex is special when all of its neighbors are 3-vertices.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{ring_at, Graph, Vertex};
use crate::rational::Rational;

pub const THRESHOLD: Rational = Rational::new(30, 11);
pub const R1_AMOUNT: Rational = Rational::new(1, 11);
pub const R2_AMOUNT: Rational = Rational::new(3, 11);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Initial,
    Final,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rule {
    R1,
    R2,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::R1 => "R1",
            Rule::R2 => "R2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transfer {
    pub rule: Rule,
    pub from: Vertex,
    pub to: Vertex,
    pub amount: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeLedger {
    pub stage: Stage,
    /// Indexed by vertex.
    pub charges: Vec<Rational>,
    /// Empty at the initial stage.
    pub transfers: Vec<Transfer>,
}

impl ChargeLedger {
    pub fn total(&self) -> Rational {
        self.charges.iter().sum()
    }

    pub fn min_charge(&self) -> Option<Rational> {
        self.charges.iter().copied().min()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DischargeError {
    StageMismatch { expected: Stage, found: Stage },
    SizeMismatch { graph: usize, ledger: usize },
    NotSubcubic { vertex: Vertex, degree: usize },
}

impl fmt::Display for DischargeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DischargeError::StageMismatch { expected, found } => {
                write!(f, "ledger is at stage {found:?}, expected {expected:?}")
            }
            DischargeError::SizeMismatch { graph, ledger } => {
                write!(f, "ledger has {ledger} charges for a graph on {graph} vertices")
            }
            DischargeError::NotSubcubic { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree}; input must be subcubic")
            }
        }
    }
}

impl core::error::Error for DischargeError {}

pub fn is_special(g: &Graph, v: Vertex) -> bool {
    g.degree(v) == 3 && g.neighbors(v).iter().all(|&w| g.degree(w) == 3)
}

pub fn initial_charges(g: &Graph) -> ChargeLedger {
    ChargeLedger {
        stage: Stage::Initial,
        charges: g.vertices().map(|v| Rational::integer(g.degree(v) as i64) - THRESHOLD).collect(),
        transfers: Vec::new(),
    }
}

/// Every transfer R1 and R2 make on `g`, grouped by giver in vertex order.
pub fn transfers(g: &Graph) -> Vec<Transfer> {
    let mut out = Vec::new();
    for v in g.vertices().filter(|&v| g.degree(v) == 3) {
        if is_special(g, v) {
            for w in ring_at(g, v, 2).into_iter().filter(|&w| g.degree(w) == 2) {
                out.push(Transfer { rule: Rule::R1, from: v, to: w, amount: R1_AMOUNT });
            }
        } else {
            for &w in g.neighbors(v).iter().filter(|&&w| g.degree(w) == 2) {
                out.push(Transfer { rule: Rule::R2, from: v, to: w, amount: R2_AMOUNT });
            }
        }
    }
    out
}

pub fn apply_discharging(g: &Graph, ledger: &ChargeLedger) -> Result<ChargeLedger, DischargeError> {
    if ledger.stage != Stage::Initial {
        return Err(DischargeError::StageMismatch { expected: Stage::Initial, found: ledger.stage });
    }
    if ledger.charges.len() != g.n() {
        return Err(DischargeError::SizeMismatch { graph: g.n(), ledger: ledger.charges.len() });
    }
    let transfers = transfers(g);
    let mut charges = ledger.charges.clone();
    for t in &transfers {
        charges[t.from] -= t.amount;
        charges[t.to] += t.amount;
    }
    Ok(ChargeLedger { stage: Stage::Final, charges, transfers })
}

/// Which structural predicates hold, with the vertices that break them.
/// Each predicate holds exactly when its witness list is empty.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StructuralReport {
    /// Vertices of degree below two.
    pub low_degree: Vec<Vertex>,
    /// Adjacent 2-vertices, smaller id first.
    pub adjacent_twos: Vec<(Vertex, Vertex)>,
    /// 3-vertices with at least two 2-neighbors, with those neighbors.
    pub crowded_threes: Vec<(Vertex, Vec<Vertex>)>,
    /// 2-vertices with fewer than two special 3-vertices at distance two,
    /// with the special ones that are there.
    pub lonely_twos: Vec<(Vertex, Vec<Vertex>)>,
}

impl StructuralReport {
    pub fn min_degree_ok(&self) -> bool {
        self.low_degree.is_empty()
    }

    pub fn no_adjacent_2_ok(&self) -> bool {
        self.adjacent_twos.is_empty()
    }

    pub fn two_neighbor_ok(&self) -> bool {
        self.crowded_threes.is_empty()
    }

    pub fn special_in_n2_ok(&self) -> bool {
        self.lonely_twos.is_empty()
    }

    pub fn all_ok(&self) -> bool {
        self.min_degree_ok() && self.no_adjacent_2_ok() && self.two_neighbor_ok() && self.special_in_n2_ok()
    }
}

pub fn structural_audit(g: &Graph) -> Result<StructuralReport, DischargeError> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) > 3) {
        return Err(DischargeError::NotSubcubic { vertex: v, degree: g.degree(v) });
    }
    let mut report = StructuralReport::default();
    for v in g.vertices() {
        match g.degree(v) {
            0 | 1 => report.low_degree.push(v),
            2 => {
                for &w in g.neighbors(v).iter().filter(|&&w| w > v && g.degree(w) == 2) {
                    report.adjacent_twos.push((v, w));
                }
                let specials: Vec<Vertex> = ring_at(g, v, 2).into_iter().filter(|&w| is_special(g, w)).collect();
                if specials.len() < 2 {
                    report.lonely_twos.push((v, specials));
                }
            }
            _ => {
                let twos: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| g.degree(w) == 2).collect();
                if twos.len() >= 2 {
                    report.crowded_threes.push((v, twos));
                }
            }
        }
    }
    Ok(report)
}

/// Final charge of a 2-vertex with two 3-neighbors giving by R2 and two
/// special vertices at distance two giving by R1.
pub fn two_vertex_closing_charge() -> Rational {
    Rational::integer(2) - THRESHOLD + Rational::integer(2) * R2_AMOUNT + Rational::integer(2) * R1_AMOUNT
}

/// Final charge of a 3-vertex giving the larger of one R2 transfer and
/// three R1 transfers.
pub fn three_vertex_closing_charge() -> Rational {
    Rational::integer(3) - THRESHOLD - R2_AMOUNT.max(Rational::integer(3) * R1_AMOUNT)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, Family};
    use crate::graph::subdivide;
    use alloc::vec;

    #[test]
    fn initial_examples() {
        let c4 = initial_charges(&generate(Family::Cycle(4)).unwrap());
        assert!(c4.charges.iter().all(|&c| c == Rational::new(-8, 11)));
        assert_eq!(c4.total(), Rational::new(-32, 11));
        let pet = initial_charges(&generate(Family::Petersen).unwrap());
        assert!(pet.charges.iter().all(|&c| c == Rational::new(3, 11)));
        assert_eq!(pet.total(), Rational::new(30, 11));
        let k2 = initial_charges(&generate(Family::Path(2)).unwrap());
        assert_eq!(k2.charges, vec![Rational::new(-19, 11); 2]);
    }

    #[test]
    fn petersen_keeps_its_charges() {
        let g = generate(Family::Petersen).unwrap();
        let init = initial_charges(&g);
        let fin = apply_discharging(&g, &init).unwrap();
        assert_eq!(fin.charges, init.charges);
        assert!(fin.transfers.is_empty());
        assert_eq!(fin.min_charge(), Some(Rational::new(3, 11)));
        assert!(structural_audit(&g).unwrap().all_ok());
    }

    #[test]
    fn subdivided_k4() {
        let k4 = generate(Family::Complete(4)).unwrap();
        let d = subdivide(&k4).graph;
        let init = initial_charges(&d);
        assert_eq!(init.total(), Rational::new(-36, 11));
        let fin = apply_discharging(&d, &init).unwrap();
        for v in 0..4 {
            assert_eq!(fin.charges[v], Rational::new(-6, 11));
        }
        for v in 4..10 {
            assert_eq!(fin.charges[v], Rational::new(-2, 11));
        }
        assert!(fin.transfers.iter().all(|t| t.rule == Rule::R2));
        assert_eq!(fin.total(), init.total());
        let report = structural_audit(&d).unwrap();
        assert!(report.no_adjacent_2_ok());
        assert!(!report.two_neighbor_ok());
        assert_eq!(report.crowded_threes.len(), 4);
    }

    #[test]
    fn r1_pays_each_ring_vertex_once() {
        // Two special 3-vertices 0 and 1 share a 4-cycle through 2 and 3;
        // vertex 6 is a 2-vertex at distance two from both, via two paths
        // from vertex 0 (0-2-6 and 0-3-6).
        // 0:{2,3,4} 1:{2,3,5} 2:{0,1,6} 3:{0,1,6} 4:{0,7,8} 5:{1,7,8}
        // 6:{2,3} 7:{4,5,9} 8:{4,5,9} 9:{7,8}
        let g = Graph::from_edges(
            10,
            [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 6), (3, 6), (4, 7), (4, 8), (5, 7), (5, 8), (7, 9), (8, 9)],
        )
        .unwrap();
        assert!(is_special(&g, 0));
        let fin = apply_discharging(&g, &initial_charges(&g)).unwrap();
        let from_0_to_6 = fin.transfers.iter().filter(|t| t.from == 0 && t.to == 6).count();
        assert_eq!(from_0_to_6, 1);
    }

    #[test]
    fn stage_is_checked() {
        let g = generate(Family::Cycle(5)).unwrap();
        let fin = apply_discharging(&g, &initial_charges(&g)).unwrap();
        assert_eq!(
            apply_discharging(&g, &fin),
            Err(DischargeError::StageMismatch { expected: Stage::Initial, found: Stage::Final })
        );
    }

    #[test]
    fn audit_examples() {
        let p3 = generate(Family::Path(3)).unwrap();
        let r = structural_audit(&p3).unwrap();
        assert!(!r.min_degree_ok());
        assert_eq!(r.low_degree, vec![0, 2]);
        let k4 = generate(Family::Complete(4)).unwrap();
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(structural_audit(&k4).unwrap().all_ok());
        assert_eq!(structural_audit(&star), Err(DischargeError::NotSubcubic { vertex: 0, degree: 4 }));
    }

    #[test]
    fn closing_arithmetic() {
        assert_eq!(two_vertex_closing_charge(), Rational::ZERO);
        assert_eq!(three_vertex_closing_charge(), Rational::ZERO);
    }
}

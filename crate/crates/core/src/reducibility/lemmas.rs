//! The lemma library: templates for each structural lemma and their
//! identification variants, filtered by the lemmas that come before.
//!
//! Lemma order: min_degree, adjacent_two, tool, two_neighbor, special_n2.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::variants::{quotients, Quotient, Template};
use super::{Configuration, Role, ToolAnchors};
use crate::canon::canonical_form;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Lemma {
    /// Minimum degree at least two.
    MinDegree,
    /// No two adjacent 2-vertices.
    AdjacentTwo,
    /// A deleted 2-vertex between two 3-vertices: unrepairable colorings
    /// take one of two shapes.
    Tool,
    /// Every 3-vertex has at most one 2-neighbor.
    TwoNeighbor,
    /// Every 2-vertex sees at least two special 3-vertices at distance two.
    SpecialN2,
}

impl Lemma {
    pub const ALL: [Lemma; 5] = [Lemma::MinDegree, Lemma::AdjacentTwo, Lemma::Tool, Lemma::TwoNeighbor, Lemma::SpecialN2];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::MinDegree => "min_degree",
            Lemma::AdjacentTwo => "adjacent_two",
            Lemma::Tool => "tool",
            Lemma::TwoNeighbor => "two_neighbor",
            Lemma::SpecialN2 => "special_n2",
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownLemma;

impl fmt::Display for UnknownLemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown lemma; expected one of min_degree, adjacent_two, tool, two_neighbor, special_n2")
    }
}

impl core::error::Error for UnknownLemma {}

impl FromStr for Lemma {
    type Err = UnknownLemma;

    fn from_str(s: &str) -> Result<Self, UnknownLemma> {
        Lemma::ALL.into_iter().find(|l| l.name() == s).ok_or(UnknownLemma)
    }
}

const OPEN: (usize, usize) = (2, 3);

fn min_degree() -> Vec<Template> {
    let mut t = Template::default();
    t.add("v", Role::Deleted, 1, 1);
    t.add("u", Role::Boundary, 1, 3);
    t.join("v", "u");
    vec![t]
}

/// Adds an interior vertex of degree `deg` with `deg - 1` fresh boundary
/// neighbors named from `stubs`.
fn interior_with_stubs(t: &mut Template, name: &'static str, deg: usize, stubs: &[&'static str]) {
    t.add(name, Role::Interior, deg, deg);
    for &s in &stubs[..deg - 1] {
        t.add(s, Role::Boundary, OPEN.0, OPEN.1);
        t.join(name, s);
    }
}

fn adjacent_two() -> Vec<Template> {
    let mut out = Vec::new();
    for du in [2, 3] {
        for dv in [2, 3] {
            let mut t = Template::default();
            t.add("u", Role::Deleted, 2, 2);
            t.add("v", Role::Deleted, 2, 2);
            t.join("u", "v");
            interior_with_stubs(&mut t, "u'", du, &["a1", "a2"]);
            interior_with_stubs(&mut t, "v'", dv, &["b1", "b2"]);
            t.join("u", "u'");
            t.join("v", "v'");
            out.push(t);
        }
    }
    out
}

fn tool() -> Vec<Template> {
    let mut t = Template::default();
    t.add("v", Role::Deleted, 2, 2);
    interior_with_stubs(&mut t, "u", 3, &["u1", "u2"]);
    interior_with_stubs(&mut t, "w", 3, &["w1", "w2"]);
    t.join("v", "u");
    t.join("v", "w");
    vec![t]
}

fn two_neighbor() -> Vec<Template> {
    let mut out = Vec::new();
    for d2 in [2, 3] {
        let mut t = Template::default();
        t.add("u1", Role::Deleted, 2, 2);
        t.add("u2", Role::Interior, 3, 3);
        t.add("u3", Role::Interior, 2, 2);
        interior_with_stubs(&mut t, "v1", 3, &["v1'", "v1''"]);
        interior_with_stubs(&mut t, "v2", d2, &["v2'", "v2''"]);
        interior_with_stubs(&mut t, "v3", 3, &["v3'", "v3''"]);
        t.join("u1", "u2");
        t.join("u1", "v1");
        t.join("u2", "v2");
        t.join("u2", "u3");
        t.join("u3", "v3");
        out.push(t);
    }
    out
}

fn special_n2() -> Vec<Template> {
    let mut t = Template::default();
    t.add("u", Role::Deleted, 2, 2);
    t.add("u1", Role::Interior, 3, 3);
    t.add("u2", Role::Interior, 3, 3);
    t.add("v1", Role::Interior, 3, 3);
    t.add("v2", Role::Interior, 3, 3);
    t.add("v3", Role::Boundary, 3, 3);
    t.add("v4", Role::Boundary, 3, 3);
    t.add("w1", Role::Interior, 2, 2);
    interior_with_stubs(&mut t, "w2", 3, &["x2", "x3"]);
    t.add("w3", Role::Interior, 2, 2);
    interior_with_stubs(&mut t, "w4", 3, &["x5", "x6"]);
    interior_with_stubs(&mut t, "x1", 3, &["y1", "y2"]);
    interior_with_stubs(&mut t, "x4", 3, &["y3", "y4"]);
    for (a, b) in [
        ("u", "u1"),
        ("u", "u2"),
        ("u1", "v1"),
        ("u1", "v2"),
        ("u2", "v3"),
        ("u2", "v4"),
        ("v1", "w1"),
        ("v1", "w2"),
        ("v2", "w3"),
        ("v2", "w4"),
        ("w1", "x1"),
        ("w3", "x4"),
    ] {
        t.join(a, b);
    }
    vec![t]
}

fn templates(lemma: Lemma) -> Vec<Template> {
    match lemma {
        Lemma::MinDegree => min_degree(),
        Lemma::AdjacentTwo => adjacent_two(),
        Lemma::Tool => tool(),
        Lemma::TwoNeighbor => two_neighbor(),
        Lemma::SpecialN2 => special_n2(),
    }
}

/// Narrows degree ranges using the lemmas before `lemma`; `false` if the
/// quotient cannot occur in a minimal counterexample.
fn earlier_lemmas(lemma: Lemma, g: &Graph, ranges: &mut [(usize, usize)]) -> bool {
    let exact = |r: (usize, usize), d: usize| r == (d, d);
    if lemma > Lemma::MinDegree {
        for r in ranges.iter_mut() {
            r.0 = r.0.max(2);
        }
    }
    loop {
        let before = ranges.to_vec();
        if ranges.iter().any(|r| r.0 > r.1) {
            return false;
        }
        for v in g.vertices() {
            let twos: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| exact(ranges[w], 2)).collect();
            if lemma > Lemma::AdjacentTwo && exact(ranges[v], 2) {
                for &w in g.neighbors(v) {
                    ranges[w].0 = ranges[w].0.max(3);
                }
            }
            if lemma > Lemma::TwoNeighbor && exact(ranges[v], 3) {
                if twos.len() >= 2 {
                    return false;
                }
                if twos.len() == 1 {
                    for &w in g.neighbors(v).iter().filter(|&&w| w != twos[0]) {
                        ranges[w].0 = ranges[w].0.max(3);
                    }
                }
            }
        }
        if ranges == before.as_slice() {
            return true;
        }
    }
}

fn role_code(r: Role) -> u32 {
    match r {
        Role::Deleted => 0,
        Role::Interior => 1,
        Role::Boundary => 2,
    }
}

fn anchors(t: &Template, q: &Quotient) -> ToolAnchors {
    let at = |name: &str| q.class_of[t.index(name)];
    ToolAnchors { v: at("v"), u: at("u"), w: at("w"), u_side: [at("u1"), at("u2")], w_side: [at("w1"), at("w2")] }
}

/// Every identification variant of `lemma`'s configuration, deduplicated up
/// to isomorphism, base configuration first.
pub fn build_lemma_configs(lemma: Lemma) -> Vec<Configuration> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for t in templates(lemma) {
        for mut q in quotients(&t) {
            if !earlier_lemmas(lemma, &q.local, &mut q.ranges) {
                continue;
            }
            let colors: Vec<u32> = (0..q.local.n())
                .map(|v| role_code(q.roles[v]) * 10_000 + q.ranges[v].0 as u32 * 100 + q.ranges[v].1 as u32)
                .collect();
            if !seen.insert(canonical_form(&q.local, &colors).key) {
                continue;
            }
            let variant = out.len();
            let mut c = Configuration::new(
                format!("{lemma}#{variant}"),
                q.local.clone(),
                q.roles.clone(),
                q.ranges.clone(),
                q.labels.clone(),
            )
            .expect("quotients of valid templates are valid configurations");
            c.lemma = Some(lemma);
            c.variant = variant;
            if lemma == Lemma::Tool {
                c.tool = Some(anchors(&t, &q));
            }
            out.push(c);
        }
    }
    out
}

pub fn build_lemma_config(lemma: Lemma, variant: usize) -> Option<Configuration> {
    build_lemma_configs(lemma).into_iter().nth(variant)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for l in Lemma::ALL {
            assert_eq!(l.name().parse::<Lemma>(), Ok(l));
        }
        assert_eq!("nope".parse::<Lemma>(), Err(UnknownLemma));
    }

    #[test]
    fn variant_counts() {
        // Frozen from this implementation's quotient enumeration.
        let counts: Vec<usize> = [Lemma::MinDegree, Lemma::AdjacentTwo, Lemma::Tool, Lemma::TwoNeighbor]
            .into_iter()
            .map(|l| build_lemma_configs(l).len())
            .collect();
        assert_eq!(counts, [1, 8, 2, 23]);
    }

    #[test]
    fn base_configuration_comes_first() {
        let c = build_lemma_config(Lemma::Tool, 0).unwrap();
        assert_eq!(c.n(), 7);
        assert_eq!(c.deleted().len(), 1);
        assert_eq!(c.name, "tool#0");
        let c = build_lemma_config(Lemma::TwoNeighbor, 0).unwrap();
        assert_eq!(c.n(), 11);
        assert!(build_lemma_config(Lemma::MinDegree, 1).is_none());
    }

    #[test]
    fn earlier_lemmas_drop_crowded_threes() {
        // A 3-vertex with two exact 2-neighbors cannot survive two_neighbor.
        let g = Graph::from_edges(3, [(0, 1), (0, 2)]).unwrap();
        let mut r = vec![(3, 3), (2, 2), (2, 2)];
        assert!(!earlier_lemmas(Lemma::SpecialN2, &g, &mut r));
        let mut r = vec![(3, 3), (2, 2), (2, 3)];
        assert!(earlier_lemmas(Lemma::SpecialN2, &g, &mut r));
        assert_eq!(r[2], (3, 3));
    }
}

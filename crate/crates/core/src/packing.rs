//! Packing colorings: class `i` of a spec `(s_1, ..., s_k)` may only contain
//! vertices at pairwise distance greater than `s_i`.
//!
//! Classes are 0-based here (`0..k`). External formats add one.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::{ball, subdivide, Graph, Subdivision, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PackingSpec {
    s: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecError {
    Empty,
    ZeroThreshold,
    Decreasing,
    Syntax(String),
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::Empty => f.write_str("spec needs at least one class"),
            SpecError::ZeroThreshold => f.write_str("spec entries must be positive"),
            SpecError::Decreasing => f.write_str("spec entries must be non-decreasing"),
            SpecError::Syntax(t) => write!(f, "cannot parse spec entry {t:?}"),
        }
    }
}

impl core::error::Error for SpecError {}

impl PackingSpec {
    pub fn new(s: Vec<usize>) -> Result<Self, SpecError> {
        if s.is_empty() {
            return Err(SpecError::Empty);
        }
        if s.contains(&0) {
            return Err(SpecError::ZeroThreshold);
        }
        if s.windows(2).any(|w| w[0] > w[1]) {
            return Err(SpecError::Decreasing);
        }
        Ok(PackingSpec { s })
    }

    /// `(1, 1, 2, 2)`, with classes 1a, 1b, 2a, 2b.
    pub fn one_one_two_two() -> Self {
        PackingSpec { s: vec![1, 1, 2, 2] }
    }

    /// `(1, 2, ..., k)`.
    pub fn increasing(k: usize) -> Result<Self, SpecError> {
        PackingSpec::new((1..=k).collect())
    }

    pub fn k(&self) -> usize {
        self.s.len()
    }

    pub fn thresholds(&self) -> &[usize] {
        &self.s
    }

    pub fn threshold(&self, class: usize) -> usize {
        self.s[class]
    }

    pub fn max_threshold(&self) -> usize {
        *self.s.last().expect("spec is nonempty")
    }
}

impl fmt::Display for PackingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.s.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Comma-separated thresholds, e.g. `1,1,2,2`.
impl FromStr for PackingSpec {
    type Err = SpecError;

    fn from_str(text: &str) -> Result<Self, SpecError> {
        let s = text
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| SpecError::Syntax(t.into())))
            .collect::<Result<Vec<_>, _>>()?;
        PackingSpec::new(s)
    }
}

/// `true` iff both specs have the same length and `a` is componentwise at
/// least `b` once sorted. Then every packing `a`-coloring is a packing
/// `b`-coloring with the same class indices.
pub fn spec_dominates(a: &PackingSpec, b: &PackingSpec) -> bool {
    a.k() == b.k() && a.s.iter().zip(&b.s).all(|(x, y)| x >= y)
}

/// A class per vertex; `None` marks an uncolored vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PackingColoring {
    pub classes: Vec<Option<usize>>,
}

impl PackingColoring {
    pub fn total(classes: Vec<usize>) -> Self {
        PackingColoring { classes: classes.into_iter().map(Some).collect() }
    }

    pub fn uncolored(n: usize) -> Self {
        PackingColoring { classes: vec![None; n] }
    }

    pub fn is_total(&self) -> bool {
        self.classes.iter().all(Option::is_some)
    }

    pub fn class_of(&self, v: Vertex) -> Option<usize> {
        self.classes[v]
    }

    /// Class of each vertex, if total.
    pub fn to_total(&self) -> Option<Vec<usize>> {
        self.classes.iter().copied().collect()
    }

    /// Relabel classes through `map[old] = new`.
    pub fn map_classes(&self, map: &[usize]) -> Self {
        PackingColoring { classes: self.classes.iter().map(|c| c.map(|c| map[c])).collect() }
    }
}

/// Two vertices of the same class that are too close.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub class: usize,
    /// `u < v`.
    pub u: Vertex,
    pub v: Vertex,
    pub distance: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringError {
    LengthMismatch { graph: usize, coloring: usize },
    ClassOutOfRange { vertex: Vertex, class: usize, k: usize },
    Uncolored(Vertex),
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::LengthMismatch { graph, coloring } => {
                write!(f, "coloring covers {coloring} vertices, graph has {graph}")
            }
            ColoringError::ClassOutOfRange { vertex, class, k } => {
                write!(f, "vertex {vertex} has class {} but the packing has {k} classes", class + 1)
            }
            ColoringError::Uncolored(v) => write!(f, "vertex {v} is uncolored"),
        }
    }
}

impl core::error::Error for ColoringError {}

fn check_shape(g: &Graph, spec: &PackingSpec, c: &PackingColoring) -> Result<(), ColoringError> {
    if c.classes.len() != g.n() {
        return Err(ColoringError::LengthMismatch { graph: g.n(), coloring: c.classes.len() });
    }
    for (v, &class) in c.classes.iter().enumerate() {
        if let Some(class) = class {
            if class >= spec.k() {
                return Err(ColoringError::ClassOutOfRange { vertex: v, class, k: spec.k() });
            }
        }
    }
    Ok(())
}

/// All conflicts among colored vertices, ordered by `(u, v)`.
pub fn partial_violations(g: &Graph, spec: &PackingSpec, c: &PackingColoring) -> Result<Vec<Violation>, ColoringError> {
    check_shape(g, spec, c)?;
    let mut out = Vec::new();
    for u in g.vertices() {
        let Some(class) = c.classes[u] else { continue };
        for (v, d) in ball(g, u, spec.threshold(class)) {
            if v > u && c.classes[v] == Some(class) {
                out.push(Violation { class, u, v, distance: d });
            }
        }
    }
    out.sort_by_key(|x| (x.u, x.v));
    Ok(out)
}

/// Empty iff `c` is a packing `spec`-coloring of `g`. `c` must be total.
pub fn verify_coloring(g: &Graph, spec: &PackingSpec, c: &PackingColoring) -> Result<Vec<Violation>, ColoringError> {
    check_shape(g, spec, c)?;
    if let Some(v) = c.classes.iter().position(Option::is_none) {
        return Err(ColoringError::Uncolored(v));
    }
    partial_violations(g, spec, c)
}

/// A coloring of `g` carried to its subdivision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lift {
    pub subdivision: Subdivision,
    /// `(1, 2 s_1 + 1, ..., 2 s_k + 1)`.
    pub spec: PackingSpec,
    pub coloring: PackingColoring,
    /// `class_map[i]` is the lifted class of original class `i`.
    pub class_map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftError {
    Shape(ColoringError),
    Invalid(Vec<Violation>),
}

impl fmt::Display for LiftError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftError::Shape(e) => e.fmt(f),
            LiftError::Invalid(v) => write!(f, "input coloring has {} violation(s)", v.len()),
        }
    }
}

impl core::error::Error for LiftError {}

/// Subdivision doubles distances between original vertices and leaves the
/// new vertices pairwise non-adjacent, so a packing `s`-coloring of `g`
/// becomes a packing `(1, 2s_1+1, ..., 2s_k+1)`-coloring of `D(g)` with all
/// new vertices in the threshold-1 class.
pub fn lift_subdivision(g: &Graph, spec: &PackingSpec, c: &PackingColoring) -> Result<Lift, LiftError> {
    let violations = verify_coloring(g, spec, c).map_err(LiftError::Shape)?;
    if !violations.is_empty() {
        return Err(LiftError::Invalid(violations));
    }
    let mut s = vec![1];
    s.extend(spec.thresholds().iter().map(|&x| 2 * x + 1));
    let lifted_spec = PackingSpec::new(s).expect("1 <= 2s+1 and order is preserved");
    let class_map: Vec<usize> = (1..=spec.k()).collect();
    let subdivision = subdivide(g);
    let mut classes = c.map_classes(&class_map).classes;
    classes.resize(subdivision.graph.n(), Some(0));
    Ok(Lift { subdivision, spec: lifted_spec, coloring: PackingColoring { classes }, class_map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, Family};

    #[test]
    fn spec_parsing() {
        let s: PackingSpec = "1,1,2,2".parse().unwrap();
        assert_eq!(s, PackingSpec::one_one_two_two());
        assert_eq!(s.to_string(), "1,1,2,2");
        assert_eq!("2,1".parse::<PackingSpec>(), Err(SpecError::Decreasing));
        assert_eq!("0,1".parse::<PackingSpec>(), Err(SpecError::ZeroThreshold));
        assert!("1,x".parse::<PackingSpec>().is_err());
        assert_eq!(PackingSpec::new(vec![]), Err(SpecError::Empty));
    }

    #[test]
    fn verify_examples() {
        let p3 = generate(Family::Path(3)).unwrap();
        let s11: PackingSpec = "1,1".parse().unwrap();
        assert!(verify_coloring(&p3, &s11, &PackingColoring::total(vec![0, 1, 0])).unwrap().is_empty());

        let c4 = generate(Family::Cycle(4)).unwrap();
        let s123: PackingSpec = "1,2,3".parse().unwrap();
        assert!(verify_coloring(&c4, &s123, &PackingColoring::total(vec![0, 1, 0, 2])).unwrap().is_empty());

        let c3 = generate(Family::Cycle(3)).unwrap();
        let s12: PackingSpec = "1,2".parse().unwrap();
        let v = verify_coloring(&c3, &s12, &PackingColoring::total(vec![0, 0, 1])).unwrap();
        assert_eq!(v, vec![Violation { class: 0, u: 0, v: 1, distance: 1 }]);
    }

    #[test]
    fn verify_rejects_bad_shapes() {
        let p3 = generate(Family::Path(3)).unwrap();
        let s11: PackingSpec = "1,1".parse().unwrap();
        assert_eq!(
            verify_coloring(&p3, &s11, &PackingColoring::total(vec![0, 2, 0])),
            Err(ColoringError::ClassOutOfRange { vertex: 1, class: 2, k: 2 })
        );
        assert!(matches!(
            verify_coloring(&p3, &s11, &PackingColoring::total(vec![0, 1])),
            Err(ColoringError::LengthMismatch { .. })
        ));
        let mut partial = PackingColoring::total(vec![0, 1, 0]);
        partial.classes[2] = None;
        assert_eq!(verify_coloring(&p3, &s11, &partial), Err(ColoringError::Uncolored(2)));
        assert!(partial_violations(&p3, &s11, &partial).unwrap().is_empty());
    }

    #[test]
    fn domination() {
        let p = |t: &str| t.parse::<PackingSpec>().unwrap();
        assert!(spec_dominates(&p("1,3,3,5,5"), &p("1,2,3,4,5")));
        assert!(spec_dominates(&p("1,1,2,2"), &p("1,1,2,2")));
        assert!(!spec_dominates(&p("1,1,2,2"), &p("1,2,3,4")));
        assert!(!spec_dominates(&p("1,1,2"), &p("1,1")));
    }

    #[test]
    fn lift_examples() {
        let c6 = generate(Family::Cycle(6)).unwrap();
        let s11: PackingSpec = "1,1".parse().unwrap();
        let lift = lift_subdivision(&c6, &s11, &PackingColoring::total(vec![0, 1, 0, 1, 0, 1])).unwrap();
        assert_eq!(lift.spec.thresholds(), &[1, 3, 3]);
        assert_eq!(lift.subdivision.graph.n(), 12);
        assert!(verify_coloring(&lift.subdivision.graph, &lift.spec, &lift.coloring).unwrap().is_empty());
        assert!((6..12).all(|x| lift.coloring.classes[x] == Some(0)));

        let k2 = generate(Family::Path(2)).unwrap();
        let lift = lift_subdivision(&k2, &s11, &PackingColoring::total(vec![0, 1])).unwrap();
        assert_eq!(lift.coloring.classes, vec![Some(1), Some(2), Some(0)]);

        let bad = lift_subdivision(&k2, &s11, &PackingColoring::total(vec![0, 0]));
        assert!(matches!(bad, Err(LiftError::Invalid(_))));
    }
}

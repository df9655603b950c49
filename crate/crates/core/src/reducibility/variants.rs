//! Identification variants of a configuration template.
//!
//! A host graph contains the template through a map that keeps edges and,
//! at every closed template vertex, maps its neighbors one-to-one onto the
//! host neighborhood. Images are quotients of the template. Only merges that
//! involve a closed vertex are enumerated; two boundary vertices that
//! coincide in the host can stay apart, because the split configuration
//! admits every scenario of the merged one and its repairs stay valid.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::Role;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone)]
pub(crate) struct TemplateVertex {
    pub name: &'static str,
    pub role: Role,
    pub lo: usize,
    pub hi: usize,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct Template {
    pub vertices: Vec<TemplateVertex>,
    pub adj: Vec<Vec<usize>>,
}

impl Template {
    pub fn add(&mut self, name: &'static str, role: Role, lo: usize, hi: usize) -> usize {
        self.vertices.push(TemplateVertex { name, role, lo, hi });
        self.adj.push(Vec::new());
        self.vertices.len() - 1
    }

    pub fn index(&self, name: &str) -> usize {
        self.vertices.iter().position(|v| v.name == name).unwrap_or_else(|| panic!("no template vertex {name}"))
    }

    pub fn join(&mut self, a: &str, b: &str) {
        let (a, b) = (self.index(a), self.index(b));
        self.adj[a].push(b);
        self.adj[b].push(a);
    }

    fn closed(&self, v: usize) -> bool {
        self.vertices[v].role.is_closed()
    }

    /// Closed vertices declare their exact degree and every edge touches a
    /// closed vertex.
    pub fn check(&self) {
        for (v, tv) in self.vertices.iter().enumerate() {
            if tv.role.is_closed() {
                assert!(tv.lo == tv.hi && tv.lo == self.adj[v].len(), "{} is closed but open", tv.name);
            }
            assert!(self.adj[v].iter().all(|&w| self.closed(v) || self.closed(w)), "{} has a boundary edge", tv.name);
        }
    }
}

/// Class label of each template vertex: the smallest member of its class.
type Labels = Vec<u8>;

struct Search<'a> {
    t: &'a Template,
    closed: Vec<usize>,
    seen: BTreeSet<(Labels, usize, usize)>,
    results: BTreeSet<Labels>,
}

fn range_of(t: &Template, labels: &Labels, class: u8) -> (usize, usize) {
    let mut lo = 0;
    let mut hi = usize::MAX;
    for (v, &l) in labels.iter().enumerate() {
        if l == class {
            lo = lo.max(t.vertices[v].lo);
            hi = hi.min(t.vertices[v].hi);
        }
    }
    (lo, hi)
}

fn merge(t: &Template, labels: &Labels, a: usize, b: usize) -> Option<Labels> {
    let (la, lb) = (labels[a], labels[b]);
    if la == lb {
        return Some(labels.clone());
    }
    for (x, list) in t.adj.iter().enumerate() {
        for &y in list {
            if labels[x] == la && labels[y] == lb {
                return None;
            }
        }
    }
    let (keep, drop) = (la.min(lb), la.max(lb));
    let merged: Labels = labels.iter().map(|&l| if l == drop { keep } else { l }).collect();
    let (lo, hi) = range_of(t, &merged, keep);
    (lo <= hi).then_some(merged)
}

/// Neighbor labels of `v`, or `None` if two neighbors share a class.
fn injective_image(t: &Template, labels: &Labels, v: usize) -> Option<Vec<u8>> {
    let mut img: Vec<u8> = t.adj[v].iter().map(|&w| labels[w]).collect();
    img.sort_unstable();
    let len = img.len();
    img.dedup();
    (img.len() == len).then_some(img)
}

/// Forces every closed class to have exactly the neighborhood of its first
/// closed member, branching over the ways to achieve it.
fn propagate(t: &Template, labels: Labels, out: &mut Vec<Labels>) {
    let n = t.vertices.len();
    let mut first_closed: BTreeMap<u8, usize> = BTreeMap::new();
    for v in 0..n {
        if t.closed(v) {
            first_closed.entry(labels[v]).or_insert(v);
            if injective_image(t, &labels, v).is_none() {
                return;
            }
        }
    }
    let classes: BTreeSet<u8> = labels.iter().copied().collect();
    for &class in &classes {
        if first_closed.contains_key(&class) {
            continue;
        }
        let mut around: BTreeSet<u8> = BTreeSet::new();
        for v in (0..n).filter(|&v| labels[v] == class) {
            around.extend(t.adj[v].iter().map(|&w| labels[w]));
        }
        if around.len() > range_of(t, &labels, class).1 {
            return;
        }
    }
    for (&class, &x) in &first_closed {
        let target = injective_image(t, &labels, x).expect("checked above");
        for y in (0..n).filter(|&y| labels[y] == class && y != x) {
            if let Some(&z) = t.adj[y].iter().find(|&&z| target.binary_search(&labels[z]).is_err()) {
                for &option in &t.adj[x] {
                    if let Some(next) = merge(t, &labels, z, option) {
                        propagate(t, next, out);
                    }
                }
                return;
            }
        }
    }
    out.push(labels);
}

impl Search<'_> {
    fn explore(&mut self, labels: Labels, i: usize, from: usize) {
        if !self.seen.insert((labels.clone(), i, from)) {
            return;
        }
        let Some(&x) = self.closed.get(i) else {
            self.results.insert(labels);
            return;
        };
        self.explore(labels.clone(), i + 1, 0);
        let n = self.t.vertices.len();
        for y in from..n {
            let eligible = y != x && (!self.t.closed(y) || y > x) && labels[y] != labels[x];
            if !eligible {
                continue;
            }
            if let Some(merged) = merge(self.t, &labels, x, y) {
                let mut outs = Vec::new();
                propagate(self.t, merged, &mut outs);
                for next in outs {
                    self.explore(next, i, y + 1);
                }
            }
        }
    }
}

/// One quotient of a template.
#[derive(Debug, Clone)]
pub(crate) struct Quotient {
    pub local: Graph,
    pub roles: Vec<Role>,
    pub ranges: Vec<(usize, usize)>,
    pub labels: Vec<String>,
    /// Template vertex to local vertex.
    pub class_of: Vec<Vertex>,
}

/// All quotients, most vertices first, then by partition.
pub(crate) fn quotients(t: &Template) -> Vec<Quotient> {
    t.check();
    let n = t.vertices.len();
    assert!(n < u8::MAX as usize);
    let closed = (0..n).filter(|&v| t.closed(v)).collect();
    let mut search = Search { t, closed, seen: BTreeSet::new(), results: BTreeSet::new() };
    let identity: Labels = (0..n as u8).collect();
    let mut start = Vec::new();
    propagate(t, identity, &mut start);
    for labels in start {
        search.explore(labels, 0, 0);
    }
    let mut parts: Vec<Labels> = search.results.into_iter().collect();
    parts.sort_by_key(|l| {
        let classes = l.iter().collect::<BTreeSet<_>>().len();
        (core::cmp::Reverse(classes), l.clone())
    });
    parts.into_iter().map(|l| build(t, &l)).collect()
}

fn build(t: &Template, labels: &Labels) -> Quotient {
    let classes: Vec<u8> = labels.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let index = |l: u8| classes.binary_search(&l).expect("label is a class");
    let class_of: Vec<Vertex> = labels.iter().map(|&l| index(l)).collect();
    let mut roles = vec![Role::Boundary; classes.len()];
    let mut names: Vec<Vec<&str>> = vec![Vec::new(); classes.len()];
    for (v, tv) in t.vertices.iter().enumerate() {
        let c = class_of[v];
        roles[c] = roles[c].min(tv.role);
        names[c].push(tv.name);
    }
    let ranges = classes.iter().map(|&l| range_of(t, labels, l)).collect();
    let mut edges = BTreeSet::new();
    for (x, list) in t.adj.iter().enumerate() {
        for &y in list {
            let (a, b) = (class_of[x], class_of[y]);
            edges.insert((a.min(b), a.max(b)));
        }
    }
    let local = Graph::from_edges(classes.len(), edges).expect("merges never join adjacent classes");
    let labels = names.into_iter().map(|parts| parts.join("=")).collect();
    Quotient { local, roles, ranges, labels, class_of }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pendant_has_no_merges() {
        let mut t = Template::default();
        t.add("v", Role::Deleted, 1, 1);
        t.add("u", Role::Boundary, 1, 3);
        t.join("v", "u");
        let q = quotients(&t);
        assert_eq!(q.len(), 1);
        assert_eq!(q[0].local.m(), 1);
    }

    #[test]
    fn two_path_can_close_a_triangle() {
        // Deleted 2-vertex d with interior neighbors a, b of degree 2; their
        // other neighbors x, y are boundary. x = b (with y = a) closes a
        // triangle; x = y would merge two boundary vertices and is skipped.
        let mut t = Template::default();
        t.add("d", Role::Deleted, 2, 2);
        t.add("a", Role::Interior, 2, 2);
        t.add("b", Role::Interior, 2, 2);
        t.add("x", Role::Boundary, 2, 3);
        t.add("y", Role::Boundary, 2, 3);
        t.join("d", "a");
        t.join("d", "b");
        t.join("a", "x");
        t.join("b", "y");
        let q = quotients(&t);
        let shapes: Vec<(usize, usize)> = q.iter().map(|q| (q.local.n(), q.local.m())).collect();
        assert!(shapes.contains(&(5, 4)));
        assert!(shapes.contains(&(3, 3)));
        assert!(!shapes.contains(&(4, 4)), "x = y is a boundary-only merge");
    }
}

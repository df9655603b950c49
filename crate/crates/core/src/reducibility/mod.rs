//! Mechanical reducibility checks for local configurations for the packing
//! `(1, 1, 2, 2)`.
//!
//! A [`Configuration`] is a small graph `L` whose vertices are deleted,
//! interior or boundary. Deleted and interior vertices are *closed*: their
//! whole host neighborhood is in `L`. A *scenario* is any coloring of the
//! non-deleted vertices that is admissible in `L - D`; every coloring of the
//! host minus `D` restricts to one. A *repair* colors `D` and may recolor
//! interior vertices, and is only accepted when every check it needs can be
//! made inside `L`.

mod check;
mod lemmas;
mod scenarios;
mod tool;
mod variants;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{all_pairs_distances, Graph, Vertex};

pub use check::{check_reducible, find_repair, CheckError, CheckMode, CheckOptions, Repair, ReducibilityReport, Verdict};
pub use lemmas::{build_lemma_config, build_lemma_configs, Lemma};
pub use scenarios::{enumerate_scenarios, is_admissible, Scenario, ScenarioIter};
pub use tool::{check_tool_shapes, classify_tool_shape, ToolError, ToolShape, ToolShapeReport};

/// `1a`, `1b`, `2a`, `2b` are `0`, `1`, `2`, `3`.
pub type Color = u8;

pub const COLORS: [Color; 4] = [0, 1, 2, 3];

pub fn color_name(c: Color) -> &'static str {
    ["1a", "1b", "2a", "2b"][c as usize]
}

/// Distance threshold of a color.
pub fn threshold(c: Color) -> usize {
    if c < 2 {
        1
    } else {
        2
    }
}

/// The color obtained by swapping `1a`/`1b` (if `swap1`) and `2a`/`2b` (if
/// `swap2`).
pub fn swap_color(c: Color, swap1: bool, swap2: bool) -> Color {
    match c {
        0 | 1 if swap1 => 1 - c,
        2 | 3 if swap2 => 5 - c,
        _ => c,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Deleted,
    Interior,
    Boundary,
}

impl Role {
    pub fn is_closed(self) -> bool {
        self != Role::Boundary
    }
}

/// Vertices of the tool configuration: the deleted 2-vertex `v`, its
/// neighbors `u`, `w`, and their other neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ToolAnchors {
    pub v: Vertex,
    pub u: Vertex,
    pub w: Vertex,
    pub u_side: [Vertex; 2],
    pub w_side: [Vertex; 2],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub name: String,
    pub lemma: Option<Lemma>,
    pub variant: usize,
    pub local: Graph,
    pub roles: Vec<Role>,
    /// Allowed host degree `(lo, hi)`; exact for closed vertices.
    pub host_degree: Vec<(usize, usize)>,
    pub labels: Vec<String>,
    pub tool: Option<ToolAnchors>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConfigError {
    LengthMismatch,
    NoDeletedVertex,
    /// A closed vertex whose declared degree differs from its local degree.
    OpenClosedVertex(Vertex),
    BadDegreeRange(Vertex),
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::LengthMismatch => f.write_str("roles, degrees and labels must cover every vertex"),
            ConfigError::NoDeletedVertex => f.write_str("configuration deletes nothing"),
            ConfigError::OpenClosedVertex(v) => {
                write!(f, "vertex {v} is deleted or interior but its host degree is not its local degree")
            }
            ConfigError::BadDegreeRange(v) => write!(f, "vertex {v} has an empty or too small degree range"),
        }
    }
}

impl core::error::Error for ConfigError {}

impl Configuration {
    pub fn new(
        name: impl Into<String>,
        local: Graph,
        roles: Vec<Role>,
        host_degree: Vec<(usize, usize)>,
        labels: Vec<String>,
    ) -> Result<Self, ConfigError> {
        let n = local.n();
        if roles.len() != n || host_degree.len() != n || labels.len() != n {
            return Err(ConfigError::LengthMismatch);
        }
        if !roles.contains(&Role::Deleted) {
            return Err(ConfigError::NoDeletedVertex);
        }
        for v in local.vertices() {
            let (lo, hi) = host_degree[v];
            if roles[v].is_closed() && (lo != local.degree(v) || hi != local.degree(v)) {
                return Err(ConfigError::OpenClosedVertex(v));
            }
            if lo > hi || hi < local.degree(v) {
                return Err(ConfigError::BadDegreeRange(v));
            }
        }
        Ok(Configuration { name: name.into(), lemma: None, variant: 0, local, roles, host_degree, labels, tool: None })
    }

    pub fn n(&self) -> usize {
        self.local.n()
    }

    pub fn deleted(&self) -> Vec<Vertex> {
        self.with_role(Role::Deleted)
    }

    pub fn interior(&self) -> Vec<Vertex> {
        self.with_role(Role::Interior)
    }

    pub fn boundary(&self) -> Vec<Vertex> {
        self.with_role(Role::Boundary)
    }

    fn with_role(&self, role: Role) -> Vec<Vertex> {
        self.local.vertices().filter(|&v| self.roles[v] == role).collect()
    }

    pub fn visible(&self) -> usize {
        self.n() - self.deleted().len()
    }

    /// Compact description: labels with roles, then edges.
    pub fn describe(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        for v in self.local.vertices() {
            let tag = match self.roles[v] {
                Role::Deleted => "D",
                Role::Interior => "I",
                Role::Boundary => "B",
            };
            let (lo, hi) = self.host_degree[v];
            let _ = write!(out, "{}:{}{}{} ", self.labels[v], tag, lo, if lo == hi { String::new() } else { alloc::format!("-{hi}") });
        }
        out.push('|');
        for (u, v) in self.local.edges() {
            let _ = write!(out, " {}-{}", self.labels[u], self.labels[v]);
        }
        out
    }
}

const FAR: u8 = u8::MAX;

/// Distances and flags shared by scenario enumeration and repair search.
#[derive(Debug, Clone)]
pub(crate) struct Prepared {
    pub n: usize,
    pub roles: Vec<Role>,
    /// Distances in `L`, capped at `FAR`.
    pub full: Vec<Vec<u8>>,
    /// Distances in `L - D`.
    pub minus: Vec<Vec<u8>>,
    /// Closed vertex whose neighbors are all closed: a threshold-2 color on
    /// it can be checked locally.
    pub safe2: Vec<bool>,
    /// Unordered pairs of vertices with a common deleted neighbor.
    pub via_deleted: Vec<Vec<bool>>,
    pub deleted: Vec<Vertex>,
    /// Interior vertices by distance from `D`, then id.
    pub interior: Vec<Vertex>,
    /// Non-deleted vertices in breadth-first order from `D`.
    pub scenario_order: Vec<Vertex>,
    /// Number of leading `scenario_order` entries needed to cover `N(D)`.
    pub frontier: usize,
}

fn capped(d: Vec<Vec<Option<usize>>>) -> Vec<Vec<u8>> {
    d.into_iter()
        .map(|row| row.into_iter().map(|x| x.map_or(FAR, |x| x.min(FAR as usize - 1) as u8)).collect())
        .collect()
}

impl Prepared {
    pub fn new(c: &Configuration) -> Self {
        let g = &c.local;
        let n = g.n();
        let deleted = c.deleted();
        let full = capped(all_pairs_distances(g));
        let (minus_graph, kept) = g.without(&deleted);
        let minus_small = all_pairs_distances(&minus_graph);
        let mut minus = vec![vec![FAR; n]; n];
        for (i, &a) in kept.iter().enumerate() {
            for (j, &b) in kept.iter().enumerate() {
                if let Some(d) = minus_small[i][j] {
                    minus[a][b] = d.min(FAR as usize - 1) as u8;
                }
            }
        }
        let safe2 = g
            .vertices()
            .map(|v| c.roles[v].is_closed() && g.neighbors(v).iter().all(|&w| c.roles[w].is_closed()))
            .collect();
        let mut via_deleted = vec![vec![false; n]; n];
        for &d in &deleted {
            for &a in g.neighbors(d) {
                for &b in g.neighbors(d) {
                    if a != b {
                        via_deleted[a][b] = true;
                    }
                }
            }
        }
        let from_d = |v: Vertex| deleted.iter().map(|&d| full[d][v]).min().unwrap_or(FAR);
        let mut interior = c.interior();
        interior.sort_by_key(|&v| (from_d(v), v));
        let mut scenario_order: Vec<Vertex> = g.vertices().filter(|&v| c.roles[v] != Role::Deleted).collect();
        scenario_order.sort_by_key(|&v| (from_d(v), v));
        let frontier = scenario_order
            .iter()
            .rposition(|&v| from_d(v) <= 1)
            .map_or(0, |p| p + 1);
        Prepared {
            n,
            roles: c.roles.clone(),
            full,
            minus,
            safe2,
            via_deleted,
            deleted,
            interior,
            scenario_order,
            frontier,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swaps() {
        assert_eq!(swap_color(0, true, false), 1);
        assert_eq!(swap_color(3, true, true), 2);
        assert_eq!(swap_color(2, true, false), 2);
        assert_eq!(threshold(1), 1);
        assert_eq!(threshold(2), 2);
        assert_eq!(color_name(3), "2b");
    }

    #[test]
    fn constructor_checks() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let labels = || vec!["v".into(), "u".into()];
        assert!(Configuration::new("ok", g.clone(), vec![Role::Deleted, Role::Boundary], vec![(1, 1), (1, 3)], labels()).is_ok());
        assert_eq!(
            Configuration::new("x", g.clone(), vec![Role::Interior, Role::Boundary], vec![(1, 1), (1, 3)], labels()),
            Err(ConfigError::NoDeletedVertex)
        );
        assert_eq!(
            Configuration::new("x", g.clone(), vec![Role::Deleted, Role::Interior], vec![(1, 1), (2, 2)], labels()),
            Err(ConfigError::OpenClosedVertex(1))
        );
        assert_eq!(
            Configuration::new("x", g, vec![Role::Deleted, Role::Boundary], vec![(1, 1), (0, 0)], labels()),
            Err(ConfigError::BadDegreeRange(1))
        );
    }
}

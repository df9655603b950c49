//! The two shapes a coloring of `G - v` must take around a deleted 2-vertex
//! `v` with 3-neighbors `u`, `w` when it cannot be repaired.
//!
//! * Shape one: `{f(u), f(w)} = {1a, 1b}`, both `1a` and `1b` appear on
//!   `u, u1, u2` and on `w, w1, w2`, and both `2a` and `2b` appear at
//!   distance two from `v`.
//! * Shape two: `f(u) = f(w)` is a 2-class and `{f(u1), f(u2)} = {f(w1),
//!   f(w2)} = {1a, 1b}`.

use alloc::vec::Vec;
use core::fmt;

use super::check::{find_repair_prepared, CheckError};
use super::{enumerate_scenarios, Color, Configuration, Prepared, Scenario, ToolAnchors};
use crate::graph::{ring_at, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ToolShape {
    One,
    Two,
}

impl fmt::Display for ToolShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ToolShape::One => "shape 1",
            ToolShape::Two => "shape 2",
        })
    }
}

fn has_both(colors: &[Option<Color>], vertices: &[usize], a: Color, b: Color) -> bool {
    let seen = |c| vertices.iter().any(|&x| colors[x] == Some(c));
    seen(a) && seen(b)
}

/// The shapes `colors` matches around the anchors. Shape one is reported
/// when both match.
pub fn classify_tool_shape(local: &Graph, a: &ToolAnchors, colors: &[Option<Color>]) -> Option<ToolShape> {
    let f = |x: usize| colors[x];
    let (fu, fw) = (f(a.u)?, f(a.w)?);
    let pair = |side: [usize; 2]| {
        let mut p = [f(side[0]), f(side[1])];
        p.sort();
        p
    };
    let one = {
        let mut uw = [fu, fw];
        uw.sort();
        uw == [0, 1]
            && has_both(colors, &[a.u, a.u_side[0], a.u_side[1]], 0, 1)
            && has_both(colors, &[a.w, a.w_side[0], a.w_side[1]], 0, 1)
            && has_both(colors, &ring_at(local, a.v, 2), 2, 3)
    };
    if one {
        return Some(ToolShape::One);
    }
    let ones = [Some(0), Some(1)];
    (fu == fw && fu >= 2 && pair(a.u_side) == ones && pair(a.w_side) == ones).then_some(ToolShape::Two)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ToolShapeReport {
    pub scenarios: u64,
    /// Scenarios where no color for `v` alone works.
    pub not_directly_extendable: u64,
    /// Of those, the ones some interior recoloring repairs.
    pub repaired_by_recoloring: u64,
    pub shape_one: u64,
    pub shape_two: u64,
    /// Unrepairable scenarios matching neither shape.
    pub unclassified: Vec<Scenario>,
}

impl ToolShapeReport {
    pub fn all_classified(&self) -> bool {
        self.unclassified.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ToolError {
    NotToolConfiguration,
    Check(CheckError),
}

impl fmt::Display for ToolError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ToolError::NotToolConfiguration => f.write_str("configuration has no tool anchors"),
            ToolError::Check(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for ToolError {}

/// Classifies every unrepairable scenario of a tool configuration.
pub fn check_tool_shapes(c: &Configuration) -> Result<ToolShapeReport, ToolError> {
    let anchors = c.tool.ok_or(ToolError::NotToolConfiguration)?;
    let prep = Prepared::new(c);
    let mut report = ToolShapeReport::default();
    for s in enumerate_scenarios(c) {
        report.scenarios += 1;
        let direct = find_repair_prepared(&prep, &s.colors, 0).map_err(ToolError::Check)?;
        if direct.is_some() {
            continue;
        }
        report.not_directly_extendable += 1;
        if find_repair_prepared(&prep, &s.colors, usize::MAX).map_err(ToolError::Check)?.is_some() {
            report.repaired_by_recoloring += 1;
            continue;
        }
        match classify_tool_shape(&c.local, &anchors, &s.colors) {
            Some(ToolShape::One) => report.shape_one += 1,
            Some(ToolShape::Two) => report.shape_two += 1,
            None => report.unclassified.push(s),
        }
    }
    Ok(report)
}

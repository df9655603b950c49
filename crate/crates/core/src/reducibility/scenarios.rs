//! Scenarios: colorings of the non-deleted vertices that are admissible in
//! `L - D`, one per orbit of the class swaps `1a <-> 1b` and `2a <-> 2b`.
//!
//! Vertices are colored in breadth-first order from `D`, colors ascending.
//! `1b` may only appear after `1a` has, and `2b` only after `2a`; this picks
//! the lexicographically least member of each orbit.

use alloc::vec;
use alloc::vec::Vec;

use super::{threshold, Color, Configuration, Prepared, Role};
use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scenario {
    /// Indexed by local vertex; `None` exactly on deleted vertices.
    pub colors: Vec<Option<Color>>,
}

/// May `v` take `c`, given the colors assigned so far? Checks distances in
/// `L - D` and the first-use rule.
pub(crate) fn allowed(prep: &Prepared, colors: &[Option<Color>], used: &[usize; 4], v: Vertex, c: Color) -> bool {
    if (c == 1 && used[0] == 0) || (c == 3 && used[2] == 0) {
        return false;
    }
    let t = threshold(c) as u8;
    !(0..prep.n).any(|y| y != v && colors[y] == Some(c) && prep.minus[v][y] <= t)
}

/// Is `s` admissible in `L - D` (ignoring the orbit rule)?
pub fn is_admissible(c: &Configuration, s: &Scenario) -> bool {
    let prep = Prepared::new(c);
    if s.colors.len() != c.n() {
        return false;
    }
    for v in 0..c.n() {
        match (c.roles[v], s.colors[v]) {
            (Role::Deleted, None) => continue,
            (Role::Deleted, Some(_)) | (_, None) => return false,
            (_, Some(col)) if col > 3 => return false,
            (_, Some(col)) => {
                let t = threshold(col) as u8;
                if (0..c.n()).any(|y| y != v && s.colors[y] == Some(col) && prep.minus[v][y] <= t) {
                    return false;
                }
            }
        }
    }
    true
}

/// Depth-first stream of scenarios in a fixed order.
pub struct ScenarioIter {
    prep: Prepared,
    colors: Vec<Option<Color>>,
    used: [usize; 4],
    cursor: Vec<Color>,
    level: usize,
    done: bool,
}

impl ScenarioIter {
    fn new(c: &Configuration) -> Self {
        let prep = Prepared::new(c);
        let depth = prep.scenario_order.len();
        ScenarioIter { colors: vec![None; prep.n], prep, used: [0; 4], cursor: vec![0; depth + 1], level: 0, done: false }
    }
}

impl Iterator for ScenarioIter {
    type Item = Scenario;

    fn next(&mut self) -> Option<Scenario> {
        let order = &self.prep.scenario_order;
        let depth = order.len();
        if self.done {
            return None;
        }
        if depth == 0 {
            self.done = true;
            return Some(Scenario { colors: self.colors.clone() });
        }
        // Resume: a completed scenario leaves `level == depth`; step back.
        if self.level == depth {
            self.level -= 1;
        }
        loop {
            let v = order[self.level];
            if let Some(old) = self.colors[v].take() {
                self.used[old as usize] -= 1;
            }
            let next = (self.cursor[self.level]..4).find(|&c| allowed(&self.prep, &self.colors, &self.used, v, c));
            let Some(c) = next else {
                self.cursor[self.level] = 0;
                if self.level == 0 {
                    self.done = true;
                    return None;
                }
                self.level -= 1;
                continue;
            };
            self.cursor[self.level] = c + 1;
            self.colors[v] = Some(c);
            self.used[c as usize] += 1;
            self.level += 1;
            if self.level == depth {
                return Some(Scenario { colors: self.colors.clone() });
            }
            self.cursor[self.level] = 0;
        }
    }
}

pub fn enumerate_scenarios(c: &Configuration) -> ScenarioIter {
    ScenarioIter::new(c)
}

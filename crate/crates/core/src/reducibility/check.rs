//! Repair search and the reducibility verdict.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::scenarios::{allowed, Scenario};
use super::tool::classify_tool_shape;
use super::{threshold, Color, Configuration, Lemma, Prepared, Role};
use crate::graph::Vertex;

/// Colors for the deleted vertices plus recolorings of interior vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Repair {
    pub deleted: Vec<(Vertex, Color)>,
    /// `(vertex, old, new)`.
    pub recolored: Vec<(Vertex, Color, Color)>,
}

impl Repair {
    pub fn size(&self) -> usize {
        self.recolored.len()
    }

    /// `base` with the repair applied.
    pub fn apply(&self, base: &[Option<Color>]) -> Vec<Option<Color>> {
        let mut out = base.to_vec();
        for &(v, c) in &self.deleted {
            out[v] = Some(c);
        }
        for &(v, _, c) in &self.recolored {
            out[v] = Some(c);
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    /// Known color that stays.
    Kept,
    Changed,
    Deleted,
    /// Not decided yet.
    Pending,
    /// Color not known.
    Unknown,
}

struct RepairSearch<'a> {
    prep: &'a Prepared,
    status: Vec<Status>,
    color: Vec<Option<Color>>,
    original: Vec<Option<Color>>,
    vars: Vec<Vertex>,
    nodes: u64,
    budget: u64,
}

struct OutOfBudget;

impl RepairSearch<'_> {
    /// Can `z` end with `c` under `status`, given everything decided so far?
    fn consistent(&self, z: Vertex, c: Color, status: Status) -> bool {
        let t = threshold(c) as u8;
        let fresh = status != Status::Kept;
        if fresh && t == 2 && !self.prep.safe2[z] {
            return false;
        }
        for y in 0..self.prep.n {
            if y == z {
                continue;
            }
            let near = self.prep.full[z][y] <= t;
            match self.status[y] {
                Status::Pending => {}
                Status::Unknown => {
                    if (fresh && near) || (t == 2 && self.prep.via_deleted[z][y]) {
                        return false;
                    }
                }
                Status::Kept => {
                    let clash = self.color[y] == Some(c);
                    if clash && ((fresh && near) || (t == 2 && self.prep.via_deleted[z][y])) {
                        return false;
                    }
                }
                Status::Changed | Status::Deleted => {
                    if near && self.color[y] == Some(c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn dfs(&mut self, i: usize, changes_left: usize) -> Result<bool, OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OutOfBudget);
        }
        let Some(&z) = self.vars.get(i) else {
            return Ok(true);
        };
        if self.prep.roles[z] == Role::Deleted {
            for c in 0..4 {
                if self.consistent(z, c, Status::Deleted) {
                    self.status[z] = Status::Deleted;
                    self.color[z] = Some(c);
                    if self.dfs(i + 1, changes_left)? {
                        return Ok(true);
                    }
                }
            }
            self.status[z] = Status::Pending;
            self.color[z] = None;
            return Ok(false);
        }
        let old = self.original[z].expect("interior variables have known colors");
        if self.consistent(z, old, Status::Kept) {
            self.status[z] = Status::Kept;
            self.color[z] = Some(old);
            if self.dfs(i + 1, changes_left)? {
                return Ok(true);
            }
        }
        if changes_left > 0 {
            for c in (0..4).filter(|&c| c != old) {
                if self.consistent(z, c, Status::Changed) {
                    self.status[z] = Status::Changed;
                    self.color[z] = Some(c);
                    if self.dfs(i + 1, changes_left - 1)? {
                        return Ok(true);
                    }
                }
            }
        }
        self.status[z] = Status::Pending;
        self.color[z] = Some(old);
        Ok(false)
    }
}

/// Fewest recolorings first, then first in search order. `colors` gives the
/// scenario colors with `None` on deleted and on not-yet-known vertices.
/// Unknown vertices are never recolored, and a repair is only returned if it
/// is valid whatever colors they have.
fn search_repair(
    prep: &Prepared,
    colors: &[Option<Color>],
    max_recolor: usize,
    budget: &mut u64,
) -> Result<Option<Repair>, OutOfBudget> {
    let status: Vec<Status> = (0..prep.n)
        .map(|v| match (prep.roles[v], colors[v]) {
            (Role::Deleted, _) => Status::Pending,
            (_, None) => Status::Unknown,
            (Role::Interior, Some(_)) => Status::Pending,
            (Role::Boundary, Some(_)) => Status::Kept,
        })
        .collect();
    // Kept pairs sharing a deleted neighbor must already differ on 2-classes.
    for a in 0..prep.n {
        for b in a + 1..prep.n {
            if prep.via_deleted[a][b] && status[a] == Status::Kept && status[b] != Status::Pending {
                let c = colors[a].expect("kept");
                if threshold(c) == 2 && (status[b] == Status::Unknown || colors[b] == Some(c)) {
                    return Ok(None);
                }
            }
            if prep.via_deleted[a][b] && status[b] == Status::Kept && status[a] == Status::Unknown
                && threshold(colors[b].expect("kept")) == 2 {
                    return Ok(None);
                }
            if prep.via_deleted[a][b] && status[a] == Status::Unknown && status[b] == Status::Unknown {
                return Ok(None);
            }
        }
    }
    let mut vars = prep.deleted.clone();
    vars.extend(prep.interior.iter().copied().filter(|&v| colors[v].is_some()));
    let candidates = vars.len() - prep.deleted.len();
    let mut search = RepairSearch {
        prep,
        status,
        color: colors.to_vec(),
        original: colors.to_vec(),
        vars,
        nodes: 0,
        budget: 0,
    };
    for r in 0..=max_recolor.min(candidates) {
        search.nodes = 0;
        search.budget = *budget;
        let outcome = search.dfs(0, r);
        *budget = budget.saturating_sub(search.nodes);
        if !outcome? {
            continue;
        }
        let mut repair = Repair { deleted: Vec::new(), recolored: Vec::new() };
        for &z in &search.vars {
            let now = search.color[z].expect("decided");
            match search.status[z] {
                Status::Deleted => repair.deleted.push((z, now)),
                Status::Changed => repair.recolored.push((z, search.original[z].expect("known"), now)),
                _ => {}
            }
        }
        return Ok(Some(repair));
    }
    Ok(None)
}

pub(crate) fn find_repair_prepared(
    prep: &Prepared,
    colors: &[Option<Color>],
    max_recolor: usize,
) -> Result<Option<Repair>, CheckError> {
    let mut budget = 1_000_000_000;
    search_repair(prep, colors, max_recolor, &mut budget).map_err(|_| CheckError::Budget { config: String::from("(single scenario)") })
}

/// A safe repair for the (possibly partial) scenario `colors`, searching all
/// recoloring sizes.
pub fn find_repair(c: &Configuration, colors: &[Option<Color>]) -> Option<Repair> {
    let prep = Prepared::new(c);
    let mut budget = u64::MAX;
    search_repair(&prep, colors, usize::MAX, &mut budget).unwrap_or(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Certify whole subtrees of scenarios from their common prefix once
    /// `N(D)` is colored.
    Pruned,
    /// Repair every scenario separately.
    Exhaustive,
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckMode::Pruned => "pruned",
            CheckMode::Exhaustive => "exhaustive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub mode: CheckMode,
    /// Largest recolor set tried; `None` allows every interior vertex.
    pub max_recolor: Option<usize>,
    /// Total repair-search nodes before giving up.
    pub budget: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { mode: CheckMode::Pruned, max_recolor: None, budget: 2_000_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Reducible,
    Counterexample(Scenario),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducibilityReport {
    pub name: String,
    pub lemma: Option<Lemma>,
    pub variant: usize,
    pub verdict: Verdict,
    /// Scenario classes settled: single scenarios, plus (in pruned mode)
    /// whole subtrees certified by one repair.
    pub scenarios: u64,
    /// Unrepairable scenarios accepted by the configuration's exemption.
    pub exempt: u64,
    pub max_repair: usize,
    pub mode: CheckMode,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckError {
    Budget { config: String },
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckError::Budget { config } => write!(f, "repair search budget exhausted on configuration {config}"),
        }
    }
}

impl core::error::Error for CheckError {}

struct Walk<'a> {
    config: &'a Configuration,
    prep: Prepared,
    options: CheckOptions,
    budget: u64,
    colors: Vec<Option<Color>>,
    used: [usize; 4],
    scenarios: u64,
    exempt: u64,
    max_repair: usize,
}

enum Step {
    Continue,
    Failed(Scenario),
}

impl Walk<'_> {
    fn repair(&mut self) -> Result<Option<Repair>, CheckError> {
        let limit = self.options.max_recolor.unwrap_or(usize::MAX);
        search_repair(&self.prep, &self.colors, limit, &mut self.budget)
            .map_err(|_| CheckError::Budget { config: self.config.name.clone() })
    }

    fn settle_leaf(&mut self) -> Result<Step, CheckError> {
        self.scenarios += 1;
        if let Some(r) = self.repair()? {
            self.max_repair = self.max_repair.max(r.size());
            return Ok(Step::Continue);
        }
        if let Some(anchors) = &self.config.tool {
            if classify_tool_shape(&self.config.local, anchors, &self.colors).is_some() {
                self.exempt += 1;
                return Ok(Step::Continue);
            }
        }
        Ok(Step::Failed(Scenario { colors: self.colors.clone() }))
    }

    fn pruned(&mut self, level: usize) -> Result<Step, CheckError> {
        if level == self.prep.scenario_order.len() {
            return self.settle_leaf();
        }
        if level >= self.prep.frontier {
            if let Some(r) = self.repair()? {
                self.scenarios += 1;
                self.max_repair = self.max_repair.max(r.size());
                return Ok(Step::Continue);
            }
        }
        let v = self.prep.scenario_order[level];
        for c in 0..4 {
            if allowed(&self.prep, &self.colors, &self.used, v, c) {
                self.colors[v] = Some(c);
                self.used[c as usize] += 1;
                let step = self.pruned(level + 1)?;
                self.used[c as usize] -= 1;
                self.colors[v] = None;
                if let Step::Failed(s) = step {
                    return Ok(Step::Failed(s));
                }
            }
        }
        Ok(Step::Continue)
    }
}

/// `Reducible` iff every scenario has a safe repair (or is exempt); else
/// the first failing scenario in enumeration order.
pub fn check_reducible(c: &Configuration, options: &CheckOptions) -> Result<ReducibilityReport, CheckError> {
    let prep = Prepared::new(c);
    let mut walk = Walk {
        config: c,
        colors: vec![None; prep.n],
        prep,
        options: *options,
        budget: options.budget,
        used: [0; 4],
        scenarios: 0,
        exempt: 0,
        max_repair: 0,
    };
    let step = match options.mode {
        CheckMode::Pruned => walk.pruned(0)?,
        CheckMode::Exhaustive => {
            let mut step = Step::Continue;
            for s in super::enumerate_scenarios(c) {
                walk.colors = s.colors;
                step = walk.settle_leaf()?;
                if matches!(step, Step::Failed(_)) {
                    break;
                }
            }
            step
        }
    };
    let verdict = match step {
        Step::Continue => Verdict::Reducible,
        Step::Failed(s) => Verdict::Counterexample(s),
    };
    Ok(ReducibilityReport {
        name: c.name.clone(),
        lemma: c.lemma,
        variant: c.variant,
        verdict,
        scenarios: walk.scenarios,
        exempt: walk.exempt,
        max_repair: walk.max_repair,
        mode: options.mode,
    })
}

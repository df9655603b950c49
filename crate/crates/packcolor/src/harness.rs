//! Batch scan: filter graphs, color them, audit structure and charges.
//!
//! Rows come out in input order whatever the worker count. Graphs are
//! processed in chunks; each chunk is mapped in parallel and written before
//! the next one is read.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use packcolor_core::density::mad_exact;
use packcolor_core::discharge::{apply_discharging, initial_charges, structural_audit, THRESHOLD};
use packcolor_core::graph::{girth, Girth};
use packcolor_core::graph6::write_graph6;
use packcolor_core::packing::{verify_coloring, PackingColoring, PackingSpec};
use packcolor_core::solver::{solve, SolveOptions, SolveOutcome, DEFAULT_BUDGET};
use packcolor_core::{Graph, Rational};
use rayon::prelude::*;

use crate::error::Error;

const CHUNK: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    Subcubic,
    Connected,
    /// Strict: `mad < r`.
    MadLt(Rational),
    GirthAtLeast(usize),
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filter::Subcubic => f.write_str("subcubic"),
            Filter::Connected => f.write_str("connected"),
            Filter::MadLt(r) => write!(f, "mad-lt={r}"),
            Filter::GirthAtLeast(g) => write!(f, "girth-ge={g}"),
        }
    }
}

impl FromStr for Filter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.split_once('=') {
            None if s == "subcubic" => Ok(Filter::Subcubic),
            None if s == "connected" => Ok(Filter::Connected),
            Some(("mad-lt", r)) => r.parse().map(Filter::MadLt).map_err(|e| format!("mad-lt: {e}")),
            Some(("girth-ge", g)) => g.parse().map(Filter::GirthAtLeast).map_err(|e| format!("girth-ge: {e}")),
            _ => Err(format!("unknown filter `{s}`; expected subcubic, connected, mad-lt=p/q or girth-ge=g")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Colorable,
    Uncolorable,
    /// The solver hit its decision budget; says nothing either way.
    Budget,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Colorable => "colorable",
            Outcome::Uncolorable => "uncolorable",
            Outcome::Budget => "budget",
        }
    }
}

/// The four structural predicates; only computed for subcubic graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Structure {
    pub min_degree: bool,
    pub no_adjacent_2: bool,
    pub two_neighbor: bool,
    pub special_in_n2: bool,
}

impl Structure {
    pub fn all(&self) -> bool {
        self.min_degree && self.no_adjacent_2 && self.two_neighbor && self.special_in_n2
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    /// Input line (or position) the graph came from.
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub subcubic: bool,
    pub mad: Rational,
    pub girth: Girth,
    pub outcome: Outcome,
    /// Present exactly when `outcome` is `Colorable`.
    pub witness: Option<PackingColoring>,
    pub structure: Option<Structure>,
    pub initial_total: Rational,
    pub final_total: Rational,
    pub min_final_charge: Rational,
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanConfig {
    pub filters: Vec<Filter>,
    pub spec: PackingSpec,
    pub budget: u64,
    /// `0` lets the thread pool pick.
    pub workers: usize,
    pub timings: bool,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            filters: Vec::new(),
            spec: PackingSpec::one_one_two_two(),
            budget: DEFAULT_BUDGET,
            workers: 0,
            timings: false,
        }
    }
}

/// One graph through the filters and, if it passes, the full row.
pub fn scan_one(line: usize, g: &Graph, config: &ScanConfig) -> Result<Option<ScanRow>, Error> {
    let start = Instant::now();
    let subcubic = g.is_subcubic();
    let mut shape = None;
    for f in &config.filters {
        let pass = match *f {
            Filter::Subcubic => subcubic,
            Filter::Connected => g.is_connected(),
            Filter::GirthAtLeast(k) => girth(g).at_least(k),
            Filter::MadLt(_) => true,
        };
        if !pass {
            return Ok(None);
        }
    }
    let mad = mad_exact(g).map_err(|e| Error::Domain(format!("line {line}: {e}")))?.value;
    for f in &config.filters {
        if let Filter::MadLt(r) = *f {
            if mad >= r {
                return Ok(None);
            }
        }
    }
    let options = SolveOptions { budget: config.budget, restarts: None };
    let solution = solve(g, &config.spec, &options).map_err(|e| Error::Domain(format!("line {line}: {e}")))?;
    let (outcome, witness) = match solution.outcome {
        SolveOutcome::Colored(c) => {
            let violations = verify_coloring(g, &config.spec, &c).map_err(Error::domain)?;
            assert!(violations.is_empty(), "solver returned an invalid coloring on line {line}");
            (Outcome::Colorable, Some(c))
        }
        SolveOutcome::Unsatisfiable => (Outcome::Uncolorable, None),
        SolveOutcome::BudgetExceeded => (Outcome::Budget, None),
    };
    if subcubic {
        let r = structural_audit(g).map_err(Error::domain)?;
        shape = Some(Structure {
            min_degree: r.min_degree_ok(),
            no_adjacent_2: r.no_adjacent_2_ok(),
            two_neighbor: r.two_neighbor_ok(),
            special_in_n2: r.special_in_n2_ok(),
        });
    }
    let initial = initial_charges(g);
    let fin = apply_discharging(g, &initial).map_err(Error::domain)?;
    Ok(Some(ScanRow {
        line,
        graph6: write_graph6(g),
        n: g.n(),
        m: g.m(),
        subcubic,
        mad,
        girth: girth(g),
        outcome,
        witness,
        structure: shape,
        initial_total: initial.total(),
        final_total: fin.total(),
        min_final_charge: fin.min_charge().unwrap_or(Rational::ZERO),
        elapsed_ms: config.timings.then(|| start.elapsed().as_millis() as u64),
    }))
}

/// Scans `source` and hands each row to `sink` in input order. Stops at the
/// first decode error.
pub fn scan<I, F>(source: I, config: &ScanConfig, mut sink: F) -> Result<Consistency, Error>
where
    I: IntoIterator<Item = Result<(usize, Graph), Error>>,
    F: FnMut(&ScanRow) -> Result<(), Error>,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::Domain(format!("worker pool: {e}")))?;
    let mut check = Consistency::new(&config.spec);
    let mut source = source.into_iter();
    loop {
        let mut chunk = Vec::with_capacity(CHUNK);
        for item in source.by_ref().take(CHUNK) {
            chunk.push(item?);
        }
        if chunk.is_empty() {
            return Ok(check);
        }
        let rows: Vec<Result<Option<ScanRow>, Error>> =
            pool.install(|| chunk.par_iter().map(|(line, g)| scan_one(*line, g, config)).collect());
        for row in rows {
            if let Some(row) = row? {
                check.observe(&row);
                sink(&row)?;
            }
        }
    }
}

/// Convenience wrapper collecting every row.
pub fn scan_collect<I>(source: I, config: &ScanConfig) -> Result<(Vec<ScanRow>, Consistency), Error>
where
    I: IntoIterator<Item = Result<(usize, Graph), Error>>,
{
    let mut rows = Vec::new();
    let check = scan(source, config, |r| {
        rows.push(r.clone());
        Ok(())
    })?;
    Ok((rows, check))
}

/// Which per-row assertion failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    /// Initial charges sum to `2m - 30n/11`, and discharging keeps the sum.
    ChargeSum,
    /// All predicates hold but some final charge is negative.
    NegativeCharge,
    /// All predicates hold and `mad < 30/11`.
    SparseStructured,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::ChargeSum => "charge sum",
            Check::NegativeCharge => "negative final charge",
            Check::SparseStructured => "structured graph with mad < 30/11",
        })
    }
}

/// Running totals and every failure seen so far.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Consistency {
    is_1122: bool,
    pub rows: u64,
    pub colorable: u64,
    pub uncolorable: u64,
    pub budget: u64,
    /// Subcubic rows with `mad < 30/11` that are not (1,1,2,2)-colorable.
    pub contradictions: Vec<String>,
    pub failures: Vec<(Check, String)>,
}

impl Consistency {
    pub fn new(spec: &PackingSpec) -> Self {
        Consistency {
            is_1122: *spec == PackingSpec::one_one_two_two(),
            rows: 0,
            colorable: 0,
            uncolorable: 0,
            budget: 0,
            contradictions: Vec::new(),
            failures: Vec::new(),
        }
    }

    pub fn observe(&mut self, row: &ScanRow) {
        self.rows += 1;
        match row.outcome {
            Outcome::Colorable => self.colorable += 1,
            Outcome::Uncolorable => self.uncolorable += 1,
            Outcome::Budget => self.budget += 1,
        }
        let sparse = row.mad < THRESHOLD;
        if self.is_1122 && row.subcubic && sparse && row.outcome == Outcome::Uncolorable {
            self.contradictions.push(row.graph6.clone());
        }
        let expected = Rational::integer(2 * row.m as i64) - Rational::new(30 * row.n as i64, 11);
        if row.initial_total != expected || row.final_total != expected {
            self.failures.push((Check::ChargeSum, row.graph6.clone()));
        }
        if row.structure.is_some_and(|s| s.all()) {
            if row.min_final_charge < Rational::ZERO {
                self.failures.push((Check::NegativeCharge, row.graph6.clone()));
            }
            if sparse {
                self.failures.push((Check::SparseStructured, row.graph6.clone()));
            }
        }
    }

    pub fn is_clean(&self) -> bool {
        self.contradictions.is_empty() && self.failures.is_empty()
    }

    /// `2` for a contradiction or failed assertion, else `3` if any row hit
    /// the budget, else `0`.
    pub fn exit_code(&self) -> i32 {
        if !self.is_clean() {
            2
        } else if self.budget > 0 {
            3
        } else {
            0
        }
    }
}

/// The consistency checks over finished rows.
pub fn theorem_consistency_check<'a>(rows: impl IntoIterator<Item = &'a ScanRow>, spec: &PackingSpec) -> Consistency {
    let mut c = Consistency::new(spec);
    rows.into_iter().for_each(|r| c.observe(r));
    c
}

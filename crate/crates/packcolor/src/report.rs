//! Report formats.
//!
//! CSV has one row per graph and the columns `line, graph6, n, m, mad,
//! girth, spec, outcome, min_degree_ok, no_adjacent_2_ok, two_neighbor_ok,
//! special_in_n2_ok, initial_total, final_total, min_final_charge`, plus
//! `elapsed_ms` when timings are on. Rationals are written `p/q`; girth is
//! a number or `acyclic`; the structural columns are empty for graphs that
//! are not subcubic.
//!
//! JSON lines carry the same fields plus `classes`, the witness coloring
//! with classes numbered from 1, on colorable rows.

use std::io::Write;

use packcolor_core::packing::PackingSpec;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::harness::ScanRow;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub mad: String,
    pub girth: String,
    pub spec: String,
    pub outcome: String,
    pub min_degree_ok: Option<bool>,
    pub no_adjacent_2_ok: Option<bool>,
    pub two_neighbor_ok: Option<bool>,
    pub special_in_n2_ok: Option<bool>,
    pub initial_total: String,
    pub final_total: String,
    pub min_final_charge: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<usize>>,
}

impl Record {
    pub fn new(row: &ScanRow, spec: &PackingSpec) -> Record {
        let s = row.structure;
        Record {
            line: row.line,
            graph6: row.graph6.clone(),
            n: row.n,
            m: row.m,
            mad: row.mad.to_string(),
            girth: row.girth.to_string(),
            spec: spec.to_string(),
            outcome: row.outcome.name().to_string(),
            min_degree_ok: s.map(|s| s.min_degree),
            no_adjacent_2_ok: s.map(|s| s.no_adjacent_2),
            two_neighbor_ok: s.map(|s| s.two_neighbor),
            special_in_n2_ok: s.map(|s| s.special_in_n2),
            initial_total: row.initial_total.to_string(),
            final_total: row.final_total.to_string(),
            min_final_charge: row.min_final_charge.to_string(),
            elapsed_ms: row.elapsed_ms,
            classes: row.witness.as_ref().map(|c| c.classes.iter().map(|x| x.expect("witness is total") + 1).collect()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Jsonl,
}

pub struct ReportWriter<W: Write> {
    format: Format,
    spec: PackingSpec,
    csv: Option<csv::Writer<W>>,
    out: Option<W>,
}

impl<W: Write> ReportWriter<W> {
    pub fn new(out: W, format: Format, spec: &PackingSpec) -> Self {
        let (csv, out) = match format {
            Format::Csv => (Some(csv::Writer::from_writer(out)), None),
            Format::Jsonl => (None, Some(out)),
        };
        ReportWriter { format, spec: spec.clone(), csv, out }
    }

    pub fn write(&mut self, row: &ScanRow) -> Result<(), Error> {
        let mut record = Record::new(row, &self.spec);
        match self.format {
            Format::Csv => {
                record.classes = None;
                self.csv.as_mut().expect("csv writer").serialize(&record)?;
            }
            Format::Jsonl => {
                let out = self.out.as_mut().expect("jsonl writer");
                serde_json::to_writer(&mut *out, &record)?;
                writeln!(out).map_err(|source| Error::Io { path: "-".into(), source })?;
            }
        }
        Ok(())
    }

    pub fn finish(self) -> Result<W, Error> {
        let io = |source| Error::Io { path: "-".into(), source };
        match (self.csv, self.out) {
            (Some(w), _) => w.into_inner().map_err(|e| io(e.into_error())),
            (None, Some(mut w)) => {
                w.flush().map_err(io)?;
                Ok(w)
            }
            (None, None) => unreachable!("one writer is always present"),
        }
    }
}

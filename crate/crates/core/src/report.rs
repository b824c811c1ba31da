//! JSON-lines reports.
//!
//! One object per record, then a trailing `{"summary": {...}}` object.
//! Field order is fixed, so identical inputs give byte-identical reports
//! once timing is disabled.

use std::io::{self, Write};
use std::str::FromStr;

use serde::Serialize;

use crate::arith::Nat;
use crate::batch::{BatchRecord, Outcome};
use crate::criterion::{CriterionVerdict, ExclusionWitness};
use crate::fusion_type::{Dim, FusionType};
use crate::partition::GradedPartition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Default)]
pub enum Verbosity {
    Min,
    #[default]
    Witness,
    Full,
}

impl FromStr for Verbosity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "min" => Ok(Verbosity::Min),
            "witness" => Ok(Verbosity::Witness),
            "full" => Ok(Verbosity::Full),
            other => Err(format!(
                "unknown verbosity `{other}` (expected min, witness or full)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WitnessJson {
    pub x: Dim,
    pub p: Nat,
    pub best_y: Option<Dim>,
    pub lhs: Option<Nat>,
    pub rhs: Nat,
}

impl From<&ExclusionWitness> for WitnessJson {
    fn from(w: &ExclusionWitness) -> Self {
        Self {
            x: w.x_dim,
            p: w.p,
            best_y: w.best_candidate.map(|b| b.y_dim),
            lhs: w.best_candidate.map(|b| b.lhs),
            rhs: w.rhs,
        }
    }
}

#[derive(Serialize)]
struct CheckedJson<'a> {
    index: usize,
    #[serde(rename = "type")]
    input_type: &'a FusionType,
    survives: bool,
    total_partitions: usize,
    narrowed: bool,
    vacuous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    surviving_partitions: Option<&'a [GradedPartition]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

#[derive(Serialize)]
struct ErrorJson<'a> {
    index: usize,
    line: usize,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    input_type: Option<&'a FusionType>,
    error: &'a str,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub checked: usize,
    pub survived: usize,
    pub excluded: usize,
    pub errors: usize,
}

#[derive(Serialize)]
struct SummaryJson {
    summary: Summary,
}

/// Streaming report writer.
pub struct ReportWriter<W: Write> {
    out: W,
    verbosity: Verbosity,
    timing: bool,
    summary: Summary,
    internal_errors: usize,
}

impl<W: Write> ReportWriter<W> {
    pub fn new(out: W, verbosity: Verbosity, timing: bool) -> Self {
        Self {
            out,
            verbosity,
            timing,
            summary: Summary::default(),
            internal_errors: 0,
        }
    }

    fn checked_line(&self, record: &BatchRecord, t: &FusionType, v: &CriterionVerdict) -> String {
        let json = CheckedJson {
            index: record.index,
            input_type: t,
            survives: v.survives,
            total_partitions: v.total_partitions,
            narrowed: v.narrowed,
            vacuous: v.vacuous,
            witness: v
                .witness
                .as_ref()
                .filter(|_| self.verbosity >= Verbosity::Witness)
                .map(WitnessJson::from),
            surviving_partitions: (self.verbosity >= Verbosity::Full)
                .then_some(v.surviving_partitions.as_slice()),
            elapsed_ms: self.timing.then_some(record.elapsed.as_secs_f64() * 1000.0),
        };
        serde_json::to_string(&json).expect("report serialization")
    }

    pub fn write_record(&mut self, record: &BatchRecord) -> io::Result<()> {
        let line = match &record.outcome {
            Outcome::Checked {
                input_type,
                verdict,
            } => {
                self.summary.checked += 1;
                if verdict.survives {
                    self.summary.survived += 1;
                } else {
                    self.summary.excluded += 1;
                }
                self.checked_line(record, input_type, verdict)
            }
            Outcome::ParseError(message) => {
                self.summary.errors += 1;
                serde_json::to_string(&ErrorJson {
                    index: record.index,
                    line: record.line,
                    input_type: None,
                    error: message,
                })
                .expect("report serialization")
            }
            Outcome::InternalError {
                input_type,
                message,
            } => {
                self.summary.errors += 1;
                self.internal_errors += 1;
                serde_json::to_string(&ErrorJson {
                    index: record.index,
                    line: record.line,
                    input_type: Some(input_type),
                    error: message,
                })
                .expect("report serialization")
            }
        };
        writeln!(self.out, "{line}")
    }

    /// Number of records whose check failed internally (not parse errors).
    pub fn internal_errors(&self) -> usize {
        self.internal_errors
    }

    /// Writes the trailing summary object and returns the counts.
    pub fn finish(mut self) -> io::Result<Summary> {
        let line = serde_json::to_string(&SummaryJson {
            summary: self.summary,
        })
        .expect("report serialization");
        writeln!(self.out, "{line}")?;
        self.out.flush()?;
        Ok(self.summary)
    }
}

/// Renders a full report into a string.
pub fn emit_report(records: &[BatchRecord], verbosity: Verbosity, timing: bool) -> String {
    let mut buf = Vec::new();
    let mut writer = ReportWriter::new(&mut buf, verbosity, timing);
    for r in records {
        writer.write_record(r).expect("write to Vec");
    }
    writer.finish().expect("write to Vec");
    String::from_utf8(buf).expect("JSON is UTF-8")
}

//! Parallel batch checking with order-preserving output.

use std::collections::BTreeMap;
use std::io::{self, BufRead};
use std::thread;
use std::time::{Duration, Instant};

use crossbeam_channel::{bounded, unbounded};

use crate::criterion::{eno_crit, CriterionVerdict, Mode};
use crate::fusion_type::FusionType;
use crate::input::parse_type;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Checked {
        input_type: FusionType,
        verdict: CriterionVerdict,
    },
    ParseError(String),
    /// The type parsed but the check itself failed (arithmetic overflow).
    InternalError {
        input_type: FusionType,
        message: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatchRecord {
    /// Ordinal among non-blank, non-comment input lines, starting at 0.
    pub index: usize,
    /// 1-based physical line number.
    pub line: usize,
    pub outcome: Outcome,
    pub elapsed: Duration,
}

struct Job {
    index: usize,
    line: usize,
    text: String,
}

fn process(job: Job, mode: Mode) -> BatchRecord {
    let start = Instant::now();
    let outcome = match parse_type(&job.text) {
        Err(e) => Outcome::ParseError(e.to_string()),
        Ok(input_type) => match eno_crit(&input_type, mode) {
            Ok(verdict) => Outcome::Checked {
                input_type,
                verdict,
            },
            Err(e) => Outcome::InternalError {
                input_type,
                message: e.to_string(),
            },
        },
    };
    BatchRecord {
        index: job.index,
        line: job.line,
        outcome,
        elapsed: start.elapsed(),
    }
}

fn read_jobs<R: BufRead>(input: R, mut send: impl FnMut(Job) -> bool) -> io::Result<()> {
    let mut index = 0;
    for (n, line) in input.lines().enumerate() {
        let text = line?;
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let job = Job {
            index,
            line: n + 1,
            text,
        };
        index += 1;
        if !send(job) {
            break;
        }
    }
    Ok(())
}

/// Checks every type literal in `input`, calling `emit` once per record in
/// input order. Blank lines and lines starting with `#` are skipped.
///
/// With `jobs > 1` records are checked on a pool of worker threads; a reorder
/// buffer restores input order before emission. Returns an error only when
/// reading `input` fails.
pub fn run_batch<R, F>(input: R, mode: Mode, jobs: usize, mut emit: F) -> io::Result<()>
where
    R: BufRead + Send,
    F: FnMut(BatchRecord),
{
    let jobs = jobs.max(1);
    if jobs == 1 {
        return read_jobs(input, |job| {
            emit(process(job, mode));
            true
        });
    }

    let (job_tx, job_rx) = bounded::<Job>(jobs * 4);
    let (result_tx, result_rx) = unbounded::<BatchRecord>();

    thread::scope(|scope| {
        for _ in 0..jobs {
            let job_rx = job_rx.clone();
            let result_tx = result_tx.clone();
            scope.spawn(move || {
                for job in job_rx {
                    if result_tx.send(process(job, mode)).is_err() {
                        break;
                    }
                }
            });
        }
        drop(job_rx);
        drop(result_tx);

        let reader = scope.spawn(move || read_jobs(input, |job| job_tx.send(job).is_ok()));

        let mut pending = BTreeMap::new();
        let mut next = 0;
        for record in result_rx {
            pending.insert(record.index, record);
            while let Some(record) = pending.remove(&next) {
                emit(record);
                next += 1;
            }
        }
        debug_assert!(pending.is_empty());
        reader.join().expect("reader thread panicked")
    })
}

/// Collects [`run_batch`] output into a vector.
pub fn run_batch_collect<R: BufRead + Send>(
    input: R,
    mode: Mode,
    jobs: usize,
) -> io::Result<Vec<BatchRecord>> {
    let mut records = Vec::new();
    run_batch(input, mode, jobs, |r| records.push(r))?;
    Ok(records)
}

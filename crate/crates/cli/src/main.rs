use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use sieve_core::golden::DATASETS;
use sieve_core::{
    eno_crit, modular_partitions, parse_type, run_batch, Mode, ReportWriter, Verbosity,
};

#[derive(Parser)]
#[command(
    name = "sieve",
    version,
    about = "Exclusion sieve for integral modular fusion category types"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every type literal in a file (or `-` for stdin), one per line.
    Check {
        input: String,
        #[arg(long, default_value = "paper")]
        mode: Mode,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value = "witness")]
        verbosity: Verbosity,
        /// Omit elapsed times so reports are byte-stable.
        #[arg(long)]
        no_timing: bool,
    },
    /// Run the embedded regression datasets.
    Golden,
    /// Print the candidate gradings of one type literal.
    Partitions {
        #[arg(value_name = "TYPE")]
        literal: String,
    },
}

fn open_input(path: &str) -> anyhow::Result<Box<dyn BufRead + Send>> {
    if path == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let file = File::open(PathBuf::from(path)).with_context(|| format!("cannot open {path}"))?;
    Ok(Box::new(BufReader::new(file)))
}

fn check(
    input: &str,
    mode: Mode,
    jobs: usize,
    verbosity: Verbosity,
    timing: bool,
) -> anyhow::Result<ExitCode> {
    if jobs == 0 {
        anyhow::bail!("--jobs must be at least 1");
    }
    let reader = open_input(input)?;
    let stdout = io::stdout();
    let mut writer = ReportWriter::new(BufWriter::new(stdout.lock()), verbosity, timing);
    let mut write_error = None;
    run_batch(reader, mode, jobs, |record| {
        if write_error.is_none() {
            if let Err(e) = writer.write_record(&record) {
                write_error = Some(e);
            }
        }
    })
    .with_context(|| format!("reading {input}"))?;
    if let Some(e) = write_error {
        return Err(e).context("writing report");
    }
    let internal = writer.internal_errors();
    let summary = writer.finish().context("writing report")?;
    eprintln!(
        "checked {}: {} survived, {} excluded, {} errors",
        summary.checked, summary.survived, summary.excluded, summary.errors
    );
    Ok(if internal > 0 {
        ExitCode::from(2)
    } else if summary.errors > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn golden() -> anyhow::Result<ExitCode> {
    let mut failed = false;
    for d in DATASETS {
        let mismatches = d.mismatches();
        let status = if mismatches.is_empty() {
            "ok"
        } else {
            "MISMATCH"
        };
        println!(
            "{:<20} {:>3} types  {status}  ({})",
            d.name,
            d.expected.len(),
            d.description
        );
        for (t, expected) in mismatches {
            println!("    expected survives={expected}: {t}");
            failed = true;
        }
    }
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn partitions(literal: &str) -> anyhow::Result<ExitCode> {
    let t = match parse_type(literal) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(ExitCode::from(1));
        }
    };
    let out = io::stdout();
    let mut out = out.lock();
    writeln!(
        out,
        "type {t}  rank={} pt={} d={}",
        t.rank(),
        t.pt(),
        t.global_dim()
    )?;
    let all = modular_partitions(&t);
    for p in &all {
        writeln!(out, "{}", serde_json::to_string(p)?)?;
    }
    let verdict = eno_crit(&t, Mode::Paper)?;
    writeln!(
        out,
        "{} partitions, survives (paper mode): {}",
        all.len(),
        verdict.survives
    )?;
    if verdict.narrowed {
        writeln!(
            out,
            "only need to consider the partitions in {}",
            serde_json::to_string(&verdict.surviving_partitions)?
        )?;
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check {
            input,
            mode,
            jobs,
            verbosity,
            no_timing,
        } => check(&input, mode, jobs, verbosity, !no_timing),
        Command::Golden => golden(),
        Command::Partitions { literal } => partitions(&literal),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod commands;
mod error;
mod output;
mod parse;

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::Parser;

use args::{Cli, Command, Format, OutputArgs};
use commands::Outcome;
use error::CliError;
use output::{to_json, RunRecord, Sidecar, ARTIFACT_VERSION};

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("PSEUDOHARM_THREADS") else {
        return Ok(());
    };
    let n = parse::count(&raw)
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| CliError::usage(format!("PSEUDOHARM_THREADS must be a positive integer, got '{raw}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::usage(format!("cannot start {n} worker threads: {e}")))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, bytes).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn emit(outcome: Outcome, out: &OutputArgs, started: SystemTime, wall_time: f64) -> Result<(), CliError> {
    let record = RunRecord {
        artifact_version: ARTIFACT_VERSION.into(),
        command: outcome.command.into(),
        spec: outcome.spec,
        settings: outcome.settings,
        results: outcome.table,
        summary: outcome.summary,
        wall_time,
    };
    let mut payload = Vec::new();
    match out.format {
        Format::Csv => record.results.write_csv(&mut payload)?,
        Format::Json => payload = to_json(&record)?.into_bytes(),
    }
    if out.format == Format::Csv && !record.summary.is_empty() {
        eprintln!("summary: {}", to_json(&record.summary)?.trim_end());
    }
    let Some(path) = &out.out else {
        return std::io::stdout().write_all(&payload).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        });
    };
    write_file(path, &payload)?;
    let sidecar = Sidecar {
        artifact_version: ARTIFACT_VERSION,
        tool_version: env!("CARGO_PKG_VERSION"),
        command: record.command.clone(),
        argv: std::env::args().collect(),
        started_unix_seconds: started.duration_since(UNIX_EPOCH).map_or(0.0, |d| d.as_secs_f64()),
        wall_time,
        threads: rayon::current_num_threads(),
        format: format!("{:?}", out.format).to_lowercase(),
        summary: record.summary.clone(),
    };
    let mut meta = path.as_os_str().to_owned();
    meta.push(".meta.json");
    write_file(Path::new(&meta), to_json(&sidecar)?.as_bytes())
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    let started = SystemTime::now();
    let clock = Instant::now();
    let (outcome, out) = match &cli.command {
        Command::Spectrum(a) => (commands::spectrum(a, a.output.units)?, &a.output),
        Command::Wavefunction(a) => (commands::wavefunction(a, a.output.units)?, &a.output),
        Command::Table1(a) => (commands::table1_cmd(a, a.output.units)?, &a.output),
        Command::GroundstateScan(a) => (commands::groundstate_scan(a, a.output.units)?, &a.output),
        Command::Matmech(a) => (commands::matmech(a, a.output.units)?, &a.output),
    };
    emit(outcome, out, started, clock.elapsed().as_secs_f64())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code())
        }
    }
}

//! `cuspidal` command line: obstruction checks, enumeration, spectra,
//! Dedekind sums and d-invariants, with byte-stable JSON and CSV reports.

pub mod args;
mod commands;
pub mod report;

use std::fmt;
use std::io::Write;

use anyhow::Result;

pub use args::{Cli, Command};
pub use report::Report;

/// Process exit status. `Obstructed` is kept apart from `Error` so that
/// parameter sweeps can tell "ruled out" from "could not run".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Survives = 0,
    Error = 1,
    Obstructed = 2,
    Mismatch = 3,
}

impl Status {
    pub fn code(self) -> u8 {
        self as u8
    }
}

/// Rows for `--csv`: one header plus data rows.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(|c| c.to_string()).collect());
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }
}

/// Everything a command produces; the front end picks one rendering.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub status: Status,
    pub report: Report,
    pub human: String,
    pub table: Table,
    /// Diagnostics for standard error, whatever the format.
    pub notes: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
    Csv,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Human => "human",
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    commands::dispatch(&cli.command)
}

pub fn render(outcome: &Outcome, format: Format) -> Result<String> {
    Ok(match format {
        Format::Human => outcome.human.clone(),
        Format::Json => outcome.report.to_json() + "\n",
        Format::Csv => outcome.table.to_csv()?,
    })
}

/// Parses `argv`, runs the command and writes its output. Returns the exit
/// code.
pub fn main_with_args<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;

    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = write!(err, "{}", e.render());
            return Status::Error.code();
        }
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    let result = execute(&cli).and_then(|outcome| {
        let text = render(&outcome, cli.format())?;
        Ok((outcome.status, text, outcome.notes))
    });
    match result {
        Ok((status, text, notes)) => {
            let _ = out.write_all(text.as_bytes());
            let _ = err.write_all(notes.as_bytes());
            status.code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            Status::Error.code()
        }
    }
}

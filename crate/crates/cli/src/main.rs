//! `hyperumbral`: point evaluation, tables and identity verification.
//!
//! Exit codes: 0 success, 2 bad input, 3 domain error or pole,
//! 4 no convergence, 5 at least one identity failed.

mod functions;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hyperumbral::suite::{run_suite, SuiteConfig};
use hyperumbral::SeriesControl;

use functions::{evaluate, Evaluation, Function, FunctionArgs};

#[derive(Debug, Parser)]
#[command(name = "hyperumbral", version, about = "Hypergeometric functions, integrals and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a function at one point
    Eval {
        function: Function,
        #[command(flatten)]
        params: FunctionArgs,
        #[command(flatten)]
        series: SeriesFlags,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Tabulate a function over an evenly spaced range
    Table {
        function: Function,
        #[command(flatten)]
        params: FunctionArgs,
        #[command(flatten)]
        series: SeriesFlags,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long)]
        step: f64,
        /// Parameter that varies along the table
        #[arg(long, default_value = "x")]
        var: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run an identity suite; the bundled suite when no file is given
    Verify {
        suite: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, clap::Args)]
struct SeriesFlags {
    /// Relative truncation tolerance of every series
    #[arg(long)]
    tol: Option<f64>,
    /// Term cap of every series
    #[arg(long)]
    max_terms: Option<usize>,
}

impl SeriesFlags {
    fn control(&self) -> Result<SeriesControl, CliError> {
        let d = SeriesControl::default();
        let max_terms = self.max_terms.unwrap_or(d.max_terms);
        SeriesControl::new(self.tol.unwrap_or(d.rel_tol), d.min_terms.min(max_terms), max_terms)
            .map_err(|e| CliError::Usage(e.to_string()))
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(io::Error),
    Numeric(hyperumbral::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use hyperumbral::Error as E;
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Numeric(E::Invalid(_)) => 2,
            CliError::Numeric(E::Pole(_) | E::Domain(_) | E::NonFinite(_)) => 3,
            CliError::Numeric(E::NoConvergence { .. }) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Numeric(e) => write!(f, "{e}"),
        }
    }
}

impl From<hyperumbral::Error> for CliError {
    fn from(e: hyperumbral::Error) -> Self {
        CliError::Numeric(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

fn sink(path: Option<&PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json(mut out: Box<dyn Write>, value: &serde_json::Value) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}

/// Table abscissae `from + i·step`, computed from the index so that rounding
/// does not accumulate.
fn grid(from: f64, to: f64, step: f64) -> Result<Vec<f64>, CliError> {
    if !(from.is_finite() && to.is_finite() && step.is_finite()) || from >= to || step <= 0.0 {
        return Err(CliError::Usage(format!(
            "range needs from < to and step > 0, got from {from}, to {to}, step {step}"
        )));
    }
    let n = ((to - from) / step + 1e-9).floor() as usize + 1;
    Ok((0..n).map(|i| from + i as f64 * step).collect())
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Eval {
            function,
            params,
            series,
            format,
        } => {
            let e = evaluate(function, &params, series.control()?)?;
            match format {
                Format::Csv => {
                    println!("{}", output::format_number(e.value));
                    let terms = e.terms_used.map(|n| n.to_string()).unwrap_or_else(|| "-".into());
                    let tail = e.tail_estimate.map(output::format_number).unwrap_or_else(|| "-".into());
                    eprintln!("terms_used={terms} tail_estimate={tail}");
                }
                Format::Json => write_json(sink(None)?, &output::evaluation_json(&e))?,
            }
            Ok(0)
        }
        Command::Table {
            function,
            mut params,
            series,
            from,
            to,
            step,
            var,
            format,
            output,
        } => {
            let control = series.control()?;
            let mut rows: Vec<(f64, Evaluation)> = Vec::new();
            for x in grid(from, to, step)? {
                params.set(&var, x)?;
                rows.push((x, evaluate(function, &params, control)?));
            }
            let out = sink(output.as_ref())?;
            match format {
                Format::Csv => output::write_table(out, &rows)?,
                Format::Json => write_json(out, &output::table_json(&rows))?,
            }
            Ok(0)
        }
        Command::Verify { suite, output, format } => {
            let config = match &suite {
                Some(path) => SuiteConfig::from_json(&std::fs::read_to_string(path)?)?,
                None => SuiteConfig::default_suite(),
            };
            let reports = run_suite(&config, true)?;
            let out = sink(output.as_ref())?;
            match format {
                Format::Csv => output::write_reports(out, &reports)?,
                Format::Json => write_json(out, &output::reports_json(&reports))?,
            }
            let passed = reports.iter().filter(|r| r.passed).count();
            eprintln!("{passed} passed / {} total", reports.len());
            Ok(if passed == reports.len() { 0 } else { 5 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

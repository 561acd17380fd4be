//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 for usage and parameter errors (including
//! unreadable or malformed input files), 3 when an internal invariant check
//! fails.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::block::build_block_design;
use crate::design::{build_refined_nw, verify};
use crate::error::Error;
use crate::format::{parse_design, report_text, write_design, DesignFormat, ReportJson};
use crate::gf::{modulus_table_text, FieldSpec, GfElement};
use crate::lambda::LambdaTable;
use crate::sweep::{default_grid, sweep, to_csv};

#[derive(Debug, Parser)]
#[command(
    name = "nwdesign",
    version,
    about = "Refined Nisan-Wigderson designs over GF(2^r)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the refined NW family of n sets over [q^2]
    Gen {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = DesignFormat::Sets)]
        format: DesignFormat,
        /// Output path; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report exact standard and weak design parameters of a design file
    Verify {
        /// Design file in set-list or matrix format
        path: PathBuf,
        /// Print JSON instead of the text summary
        #[arg(long)]
        json: bool,
    },
    /// Build the rho = 1 block design; writes the family and a JSON sidecar
    Block {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = DesignFormat::Sets)]
        format: DesignFormat,
        /// Design output path; the sidecar goes to `<out>.json`
        #[arg(long)]
        out: PathBuf,
    },
    /// Measure rho over a (q, n) grid and write CSV
    Sweep {
        /// Field orders, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<u64>,
        /// Set counts, comma separated
        #[arg(long, value_delimiter = ',', conflicts_with = "n_max")]
        n: Option<Vec<u64>>,
        /// Use n = 1..=N
        #[arg(long)]
        n_max: Option<u64>,
        /// Output path; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form Λ(N(d, j)) for j in {0, 1} and d <= d-max
    LambdaTable {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d_max: u32,
    },
    /// Print the canonical modulus for each extension degree
    Moduli,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
    #[error("{0}")]
    Clap(#[from] clap::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
            CliError::Clap(e) => e.exit_code(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvariantViolation(msg) => CliError::Internal(msg),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn io_usage(path: &Path, e: io::Error) -> CliError {
    CliError::Usage(format!("{}: {e}", path.display()))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| io_usage(p, e)),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Internal(e.to_string())),
    }
}

/// Renders the `q d j Lambda` table.
pub fn lambda_table_text(field: FieldSpec, d_max: u32) -> Result<String, Error> {
    if d_max >= field.order() {
        return Err(Error::DegreeOutOfRange {
            d: d_max,
            q: field.order(),
        });
    }
    let table = LambdaTable::new(field, d_max)?;
    let mut out = String::from("q d j Lambda\n");
    for d in 0..=d_max {
        for j in [GfElement::ZERO, GfElement::ONE] {
            let value = if j.is_zero() {
                table.zero_lead(d)
            } else {
                table.nonzero_lead(d)
            };
            out.push_str(&format!("{} {d} {j} {value}\n", field.order()));
        }
    }
    Ok(out)
}

/// Runs one command, writing primary output to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Gen {
            q,
            n,
            format,
            out: path,
        } => {
            let design = build_refined_nw(FieldSpec::for_order(q)?, n)?;
            emit(out, path.as_deref(), &write_design(&design, format))
        }
        Command::Verify { path, json } => {
            let text = fs::read_to_string(&path).map_err(|e| io_usage(&path, e))?;
            let design = parse_design(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            let report = verify(&design);
            let rendered = if json {
                let mut s = serde_json::to_string_pretty(&ReportJson::new(&design, &report))
                    .map_err(|e| CliError::Internal(e.to_string()))?;
                s.push('\n');
                s
            } else {
                report_text(&design, &report)
            };
            emit(out, None, &rendered)
        }
        Command::Block {
            q,
            n,
            format,
            out: path,
        } => {
            let bd = build_block_design(FieldSpec::for_order(q)?, n)?;
            emit(out, Some(&path), &write_design(bd.combined(), format))?;
            let mut sidecar = serde_json::to_string(&bd.sidecar())
                .map_err(|e| CliError::Internal(e.to_string()))?;
            sidecar.push('\n');
            let mut side_path = path.into_os_string();
            side_path.push(".json");
            emit(out, Some(Path::new(&side_path)), &sidecar)
        }
        Command::Sweep {
            q,
            n,
            n_max,
            out: path,
        } => {
            let rows = match (n, n_max) {
                (Some(ns), _) => sweep(&q, &ns)?,
                (None, Some(max)) => sweep(&q, &(1..=max).collect::<Vec<_>>())?,
                (None, None) => {
                    let mut rows = Vec::new();
                    for &qq in &q {
                        rows.extend(sweep(&[qq], &default_grid(qq))?);
                    }
                    rows
                }
            };
            emit(out, path.as_deref(), &to_csv(&rows))
        }
        Command::LambdaTable { q, d_max } => {
            let text = lambda_table_text(FieldSpec::for_order(q)?, d_max)?;
            emit(out, None, &text)
        }
        Command::Moduli => emit(out, None, &modulus_table_text()),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write) -> Result<(), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    run(cli, out)
}

/// Process entry point; returns the exit code.
pub fn main_with_exit_code() -> i32 {
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match run_from_args(std::env::args_os(), &mut lock) {
        Ok(()) => 0,
        Err(CliError::Clap(e)) => {
            let _ = e.print();
            e.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Result<(), CliError>, String) {
        let mut buf = Vec::new();
        let res = run_from_args(
            std::iter::once("nwdesign").chain(args.iter().copied()),
            &mut buf,
        );
        (res, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn lambda_table_examples() {
        let (res, out) = run_args(&["lambda-table", "--q", "2", "--d-max", "1"]);
        res.unwrap();
        assert_eq!(out, "q d j Lambda\n2 0 0 1\n2 0 1 1\n2 1 0 2\n2 1 1 4\n");

        let (res, _) = run_args(&["lambda-table", "--q", "2", "--d-max", "2"]);
        assert_eq!(res.unwrap_err().exit_code(), 2);

        let (res, out) = run_args(&["lambda-table", "--q", "4", "--d-max", "0"]);
        res.unwrap();
        assert_eq!(out, "q d j Lambda\n4 0 0 1\n4 0 1 1\n");
    }

    #[test]
    fn gen_to_stdout() {
        let (res, out) = run_args(&["gen", "--q", "2", "--n", "4", "--format", "matrix"]);
        res.unwrap();
        assert_eq!(out, "1010\n0101\n1001\n0110\n");
        let (res, out) = run_args(&["gen", "--q", "2", "--n", "1"]);
        res.unwrap();
        assert_eq!(out, "1 2 4\n0 2\n");
    }

    #[test]
    fn parameter_errors_exit_2() {
        let (res, _) = run_args(&["gen", "--q", "3", "--n", "2"]);
        let err = res.unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("q must be a power of 2"));
        let (res, _) = run_args(&["gen", "--q", "2"]);
        assert_eq!(res.unwrap_err().exit_code(), 2);
        let (res, _) = run_args(&["sweep", "--q", "2", "--n", "5"]);
        assert_eq!(res.unwrap_err().exit_code(), 2);
    }

    #[test]
    fn invariant_errors_exit_3() {
        let e: CliError = Error::InvariantViolation("x".into()).into();
        assert_eq!(e.exit_code(), 3);
    }

    #[test]
    fn moduli() {
        let (res, out) = run_args(&["moduli"]);
        res.unwrap();
        assert!(out.starts_with("1: 0x3\n2: 0x7\n"));
    }
}

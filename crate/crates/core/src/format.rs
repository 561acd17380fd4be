//! Text formats for design families and verification reports.
//!
//! Set-list format (canonical):
//!
//! ```text
//! n q l
//! s_0 s_1 ... s_{q-1}      (one line per set, ascending)
//! ```
//!
//! Matrix format: one line per set, `l` characters of `0`/`1`.
//!
//! [`parse_design`] accepts either and tells them apart by the first line: a
//! matrix line is a single run of `0`/`1` characters, a set-list header is
//! three whitespace-separated integers.

use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::design::{DesignFamily, RhoReport};
use crate::error::{Error, Result};

/// Output layout of a design file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum DesignFormat {
    #[default]
    Sets,
    Matrix,
}

pub fn write_design(design: &DesignFamily, format: DesignFormat) -> String {
    match format {
        DesignFormat::Sets => write_sets(design),
        DesignFormat::Matrix => write_matrix(design),
    }
}

pub fn write_sets(design: &DesignFamily) -> String {
    let mut out = format!(
        "{} {} {}\n",
        design.len(),
        design.set_size(),
        design.universe()
    );
    for set in design.sets() {
        let line: Vec<String> = set.iter().map(u64::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_matrix(design: &DesignFamily) -> String {
    let mut out = String::new();
    for row in design.to_matrix() {
        out.extend(row.iter().map(|&b| if b == 1 { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

/// Whitespace-separated tokens of a line with their 1-based start columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace()
        .map(move |tok| (tok.as_ptr() as usize - line.as_ptr() as usize + 1, tok))
}

fn parse_u64(tok: &str, line: usize, col: usize, what: &str) -> Result<u64> {
    tok.parse()
        .map_err(|_| parse_err(line, col, format!("expected {what}, found {tok:?}")))
}

/// Reads a design in either set-list or matrix format.
pub fn parse_design(text: &str) -> Result<DesignFamily> {
    let first = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| parse_err(1, 1, "empty design file"))?;
    let first = first.trim();
    if !first.is_empty() && first.bytes().all(|b| b == b'0' || b == b'1') && !first.contains(' ') {
        parse_matrix(text)
    } else {
        parse_sets(text)
    }
}

pub fn parse_sets(text: &str) -> Result<DesignFamily> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, 1, "missing header"))?;
    let head: Vec<(usize, &str)> = tokens(header).collect();
    if head.len() != 3 {
        return Err(parse_err(hline, 1, "header must be \"n q l\""));
    }
    let n = parse_u64(head[0].1, hline, head[0].0, "n")?;
    let q = parse_u64(head[1].1, hline, head[1].0, "q")?;
    let l = parse_u64(head[2].1, hline, head[2].0, "l")?;
    if q == 0 {
        return Err(parse_err(hline, head[1].0, "q must be positive"));
    }

    let mut sets = Vec::with_capacity(n as usize);
    for (lineno, line) in lines.by_ref() {
        if sets.len() as u64 == n {
            return Err(parse_err(lineno, 1, format!("more than n = {n} set lines")));
        }
        let mut set = Vec::with_capacity(q as usize);
        for (col, tok) in tokens(line) {
            let x = parse_u64(tok, lineno, col, "an element")?;
            if x >= l {
                return Err(parse_err(
                    lineno,
                    col,
                    format!("element {x} is not below l = {l}"),
                ));
            }
            if set.contains(&x) {
                return Err(parse_err(lineno, col, format!("duplicate element {x}")));
            }
            set.push(x);
        }
        if set.len() as u64 != q {
            return Err(parse_err(
                lineno,
                1,
                format!("set has {} elements, expected q = {q}", set.len()),
            ));
        }
        sets.push(set);
    }
    if (sets.len() as u64) < n {
        let last = text.lines().count().max(1);
        return Err(parse_err(
            last,
            1,
            format!("found {} sets, header declares n = {n}", sets.len()),
        ));
    }
    DesignFamily::new(q as usize, l, sets)
}

pub fn parse_matrix(text: &str) -> Result<DesignFamily> {
    let mut rows = Vec::new();
    let mut width = None;
    let mut weight = None;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end();
        if line.is_empty() {
            continue;
        }
        let lineno = i + 1;
        let mut row = Vec::with_capacity(line.len());
        for (col, ch) in line.chars().enumerate() {
            match ch {
                '0' => row.push(0u8),
                '1' => row.push(1u8),
                other => {
                    return Err(parse_err(
                        lineno,
                        col + 1,
                        format!("unexpected character {other:?}"),
                    ))
                }
            }
        }
        if *width.get_or_insert(row.len()) != row.len() {
            return Err(parse_err(
                lineno,
                1,
                format!("row has {} columns, expected {}", row.len(), width.unwrap()),
            ));
        }
        let ones = row.iter().filter(|&&b| b == 1).count();
        if *weight.get_or_insert(ones) != ones {
            return Err(parse_err(
                lineno,
                1,
                format!("row has {ones} ones, expected {}", weight.unwrap()),
            ));
        }
        rows.push(row);
    }
    DesignFamily::from_matrix(&rows)
}

/// `p/q` rendering of a rational.
pub fn fmt_ratio(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal rendering with 12 significant digits and trailing zeros removed.
pub fn fmt_sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// An exact rational together with its float approximation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RationalJson {
    pub exact: String,
    pub approx: f64,
}

impl From<&BigRational> for RationalJson {
    fn from(r: &BigRational) -> Self {
        RationalJson {
            exact: fmt_ratio(r),
            approx: r.to_f64().unwrap_or(f64::NAN),
        }
    }
}

/// Serializable form of a [`RhoReport`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub n: usize,
    pub q: usize,
    pub l: u64,
    pub max_overlap: usize,
    pub rho_standard: String,
    pub rho_weak_n: RationalJson,
    pub rho_weak_prefix: RationalJson,
    pub max_prefix_sum: String,
    pub prefix_sums: Vec<String>,
}

impl ReportJson {
    pub fn new(design: &DesignFamily, report: &RhoReport) -> Self {
        ReportJson {
            n: design.len(),
            q: design.set_size(),
            l: design.universe(),
            max_overlap: report.max_overlap,
            rho_standard: report.rho_standard.to_string(),
            rho_weak_n: (&report.rho_weak_n).into(),
            rho_weak_prefix: (&report.rho_weak_prefix).into(),
            max_prefix_sum: report.max_prefix_sum().to_string(),
            prefix_sums: report.prefix_sums.iter().map(|s| s.to_string()).collect(),
        }
    }
}

/// Human-readable verification summary.
pub fn report_text(design: &DesignFamily, report: &RhoReport) -> String {
    let approx = |r: &BigRational| fmt_sig12(r.to_f64().unwrap_or(f64::NAN));
    let mut out = String::new();
    let _ = writeln!(out, "n                {}", design.len());
    let _ = writeln!(out, "q                {}", design.set_size());
    let _ = writeln!(out, "l                {}", design.universe());
    let _ = writeln!(out, "max_overlap      {}", report.max_overlap);
    let _ = writeln!(out, "rho_standard     {}", report.rho_standard);
    let _ = writeln!(
        out,
        "rho_weak_n       {} ({})",
        fmt_ratio(&report.rho_weak_n),
        approx(&report.rho_weak_n)
    );
    let _ = writeln!(
        out,
        "rho_weak_prefix  {} ({})",
        fmt_ratio(&report.rho_weak_prefix),
        approx(&report.rho_weak_prefix)
    );
    out
}

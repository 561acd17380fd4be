//! Measured ρ of refined NW families over a grid of `(q, n)`.

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::design::{build_refined_nw, theorem_bound, verify};
use crate::error::Result;
use crate::format::fmt_ratio;
use crate::gf::FieldSpec;
use crate::lambda::BigCount;
use crate::poly::index_limit;

pub const CSV_HEADER: &str = "q,n,rho_weak_n,rho_weak_prefix,rho_standard,bound,ok";

/// Largest `n` used by [`default_grid`].
pub const GRID_CAP: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub q: u64,
    pub n: u64,
    pub rho_weak_n: BigRational,
    pub rho_weak_prefix: BigRational,
    pub rho_standard: BigCount,
    /// `(1 + 1/q)^q`.
    pub bound: BigRational,
    /// `rho_weak_prefix < bound`.
    pub ok: bool,
}

impl SweepRow {
    pub fn rho_weak_n_f64(&self) -> f64 {
        self.rho_weak_n.to_f64().unwrap_or(f64::NAN)
    }

    pub fn rho_weak_prefix_f64(&self) -> f64 {
        self.rho_weak_prefix.to_f64().unwrap_or(f64::NAN)
    }

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.q,
            self.n,
            fmt_ratio(&self.rho_weak_n),
            fmt_ratio(&self.rho_weak_prefix),
            self.rho_standard,
            fmt_ratio(&self.bound),
            self.ok
        )
    }
}

/// `n` in `{q, q^2, q^3}`, capped at [`GRID_CAP`] and at `q^q`, deduplicated.
pub fn default_grid(q: u64) -> Vec<u64> {
    let limit = FieldSpec::for_order(q)
        .ok()
        .and_then(index_limit)
        .map_or(GRID_CAP, |l| l.min(u128::from(GRID_CAP)) as u64);
    let mut ns: Vec<u64> = [1, 2, 3]
        .iter()
        .map(|&e| q.saturating_pow(e).min(limit))
        .collect();
    ns.dedup();
    ns
}

pub fn sweep_row(field: FieldSpec, n: u64) -> Result<SweepRow> {
    let report = verify(&build_refined_nw(field, n)?);
    let q = u64::from(field.order());
    let bound = theorem_bound(q);
    Ok(SweepRow {
        q,
        n,
        ok: report.rho_weak_prefix < bound,
        rho_weak_n: report.rho_weak_n,
        rho_weak_prefix: report.rho_weak_prefix,
        rho_standard: report.rho_standard,
        bound,
    })
}

/// One row per `(q, n)` in `qs x ns` order. All parameters are validated
/// before any family is built.
pub fn sweep(qs: &[u64], ns: &[u64]) -> Result<Vec<SweepRow>> {
    let mut cells = Vec::new();
    for &q in qs {
        let field = FieldSpec::for_order(q)?;
        for &n in ns {
            crate::design::check_set_count(field, n)?;
            cells.push((field, n));
        }
    }
    cells.into_iter().map(|(f, n)| sweep_row(f, n)).collect()
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.csv_line());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid() {
        assert_eq!(default_grid(2), [2, 4]);
        assert_eq!(default_grid(4), [4, 16, 64]);
        assert_eq!(default_grid(16), [16, 256, 4096]);
    }

    #[test]
    fn q2_rows() {
        let rows = sweep(&[2], &[1, 2, 3, 4]).unwrap();
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|r| r.ok));
        assert_eq!(rows[3].csv_line(), "2,4,5/4,4/3,2,9/4,true");
        assert_eq!(rows[0].csv_line(), "2,1,0/1,0/1,1,9/4,true");
    }

    #[test]
    fn empty_n_list() {
        let rows = sweep(&[2, 4], &[]).unwrap();
        assert_eq!(to_csv(&rows), format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn invalid_cells_fail_up_front() {
        assert!(sweep(&[2], &[5]).is_err());
        assert!(sweep(&[3], &[1]).is_err());
        assert!(sweep(&[2], &[0]).is_err());
    }
}

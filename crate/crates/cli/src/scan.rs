//! Writhe tabulation over a parameter grid.

use std::fmt::Write;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use minknot::braid::enumerate_crossings;
use minknot::params::KnotParams;
use minknot::writhe::{closed_form_writhe, writhe_bounds};

use crate::CliError;

pub const SCAN_HEADER: &str = "N,p,q,d,w_direct,w_closed,bound,sharp,consistent";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub n: i64,
    pub p: i64,
    pub q: i64,
    pub d: i64,
    pub w_direct: i64,
    pub w_closed: i64,
    pub bound: i64,
    pub sharp: bool,
    /// Crossing count is `(N−1)q`, `|w_direct| = |w_closed|` and
    /// `|w_direct| ≤ bound`.
    pub consistent: bool,
}

impl ScanRow {
    pub fn compute(k: &KnotParams) -> Self {
        let crossings = enumerate_crossings(k);
        let w_direct: i64 = crossings.iter().map(|c| c.sign.to_i64()).sum();
        let w_closed = closed_form_writhe(k);
        let b = writhe_bounds(k);
        ScanRow {
            n: k.n(),
            p: k.p(),
            q: k.q(),
            d: k.d(),
            w_direct,
            w_closed,
            bound: b.bound,
            sharp: b.sharp,
            consistent: crossings.len() == k.expected_crossings()
                && w_direct.abs() == w_closed.abs()
                && w_direct.abs() <= b.bound,
        }
    }

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n, self.p, self.q, self.d, self.w_direct, self.w_closed, self.bound, self.sharp, self.consistent
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scan {
    pub rows: Vec<ScanRow>,
    /// Triples in the ranges that fail validation.
    pub skipped: usize,
}

impl Scan {
    pub fn to_csv(&self) -> String {
        let mut s = String::with_capacity(48 * (self.rows.len() + 2));
        s.push_str(SCAN_HEADER);
        s.push('\n');
        for r in &self.rows {
            s.push_str(&r.csv_line());
            s.push('\n');
        }
        writeln!(s, "# {} rows, {} invalid triples skipped", self.rows.len(), self.skipped).unwrap();
        s
    }

    pub fn all_consistent(&self) -> bool {
        self.rows.iter().all(|r| r.consistent)
    }
}

/// Rows for every valid triple in the ranges, in `(N, p, q)` order. With
/// `threads`, the rows are computed on a pool of that many workers; the
/// order is unchanged.
pub fn scan(
    n: RangeInclusive<i64>,
    p: RangeInclusive<i64>,
    q: RangeInclusive<i64>,
    threads: Option<usize>,
) -> Result<Scan, CliError> {
    for (name, r) in [("N", &n), ("p", &p), ("q", &q)] {
        if r.is_empty() {
            return Err(CliError::Validation(format!("{name} range {}..{} is empty", r.start(), r.end())));
        }
    }
    let mut triples = Vec::new();
    let mut skipped = 0;
    for a in n {
        for b in p.clone() {
            for c in q.clone() {
                match KnotParams::new(a, b, c) {
                    Ok(k) => triples.push(k),
                    Err(_) => skipped += 1,
                }
            }
        }
    }
    let rows = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| CliError::Validation(format!("cannot start {t} workers: {e}")))?
            .install(|| triples.par_iter().map(ScanRow::compute).collect()),
        None => triples.iter().map(ScanRow::compute).collect(),
    };
    Ok(Scan { rows, skipped })
}

/// `a..b` (inclusive), `a..=b`, or a single integer.
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let num = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("bad range bound {t:?} in {s:?}"));
    match s.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

//! Brute-force oracle harness: every series coefficient and closed form is
//! compared by exact equality against sums over enumerated words.

mod oracle;
mod suites;

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use oracle::{brute_stats, brute_stats_poly, Family, WordStats};

use crate::error::{check_k, Error, Result};
use crate::par::Exec;

/// Default length above which Hamiltonicity checks are skipped.
pub const DEFAULT_HAM_CAP: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One check at one `(family, k, n)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub family: String,
    pub k: usize,
    pub n: usize,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Poly,
    Graph,
    Degree,
    Ham,
    Formulas,
    Reversal,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::All,
        Suite::Poly,
        Suite::Graph,
        Suite::Degree,
        Suite::Ham,
        Suite::Formulas,
        Suite::Reversal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Poly => "poly",
            Suite::Graph => "graph",
            Suite::Degree => "degree",
            Suite::Ham => "ham",
            Suite::Formulas => "formulas",
            Suite::Reversal => "reversal",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub max_k: usize,
    pub ham_cap: usize,
    pub exec: Exec,
    /// When false every `elapsed_ms` is 0, making reports byte-stable.
    pub timings: bool,
}

impl VerifyOptions {
    pub fn new(max_n: usize, max_k: usize) -> Self {
        VerifyOptions {
            max_n,
            max_k,
            ham_cap: DEFAULT_HAM_CAP,
            exec: Exec::default(),
            timings: true,
        }
    }

    fn validate(&self) -> Result<()> {
        check_k(self.max_k)?;
        if self.max_n < 1 {
            return Err(Error::Parameter(format!(
                "max n must be ≥ 1, got {}",
                self.max_n
            )));
        }
        Ok(())
    }
}

/// The reports of a run plus their status counts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub reports: Vec<CheckReport>,
}

impl Summary {
    pub fn from_reports(reports: Vec<CheckReport>) -> Self {
        let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
        Summary {
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            skip: count(Status::Skip),
            reports,
        }
    }

    pub fn is_success(&self) -> bool {
        self.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.reports.iter().filter(|r| r.status == Status::Fail)
    }
}

/// One report per `n ∈ 1..=max_n` comparing the oracle with the series.
pub fn cross_check(
    family: Family,
    k: usize,
    max_n: usize,
    ham_cap: usize,
    exec: Exec,
) -> Result<Vec<CheckReport>> {
    let opts = VerifyOptions {
        max_n,
        max_k: k,
        ham_cap,
        exec,
        timings: true,
    };
    opts.validate()?;
    let cells = suites::family_cells_for(family, k, &opts)?;
    Ok(suites::run_cells(&cells, &opts))
}

/// Runs a suite. Failures are collected, never raised.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Summary> {
    opts.validate()?;
    let cells = suites::cells_for(suite, opts)?;
    Ok(Summary::from_reports(suites::run_cells(&cells, opts)))
}

/// Every family for `k ≤ max_k`, the formula identities and the reversal sweep.
pub fn run_all(max_n: usize, max_k: usize) -> Result<Summary> {
    run_suite(Suite::All, &VerifyOptions::new(max_n, max_k))
}

pub fn render_text(summary: &Summary) -> String {
    let width = summary
        .reports
        .iter()
        .map(|r| r.family.len())
        .max()
        .unwrap_or(6)
        .max(6);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<width$}  {:>2}  {:>4}  status  elapsed_ms",
        "family", "k", "n"
    );
    for r in &summary.reports {
        let _ = writeln!(
            out,
            "{:<width$}  {:>2}  {:>4}  {:<6}  {:.3}",
            r.family, r.k, r.n, r.status, r.elapsed_ms
        );
    }
    let _ = writeln!(
        out,
        "summary: {} pass, {} fail, {} skip",
        summary.pass, summary.fail, summary.skip
    );
    for r in summary.failures() {
        let _ = writeln!(out, "FAIL {} k={} n={}", r.family, r.k, r.n);
        let _ = writeln!(out, "  expected: {}", r.expected);
        let _ = writeln!(out, "  actual:   {}", r.actual);
    }
    out
}

pub fn render_json(summary: &Summary) -> String {
    let mut s = serde_json::to_string_pretty(&summary.reports).expect("reports serialize");
    s.push('\n');
    s
}

pub fn render_csv(summary: &Summary) -> String {
    let mut out = String::from("family,k,n,status,elapsed_ms\n");
    for r in &summary.reports {
        let _ = writeln!(
            out,
            "{},{},{},{},{:.3}",
            r.family, r.k, r.n, r.status, r.elapsed_ms
        );
    }
    out
}

//! Formula-versus-oracle sweeps.
//!
//! Every anchored path query (hom and weak hom) and every anchored grid
//! query in range is evaluated by its closed form and by one or both
//! oracles over an explicitly constructed graph. Totals are checked too.

use std::time::Instant;

use serde::Serialize;
use walkcount_core::oracle::{
    brute_force_count, dp_walk_count, grid_graph, path_graph, SimpleGraph,
};
use walkcount_core::{
    hom_anchored, hom_anchored_reduced, hom_total, whom_anchored, whom_anchored_closed,
    whom_grid_anchored, whom_grid_total, whom_total, Count, GridQuery, PathQuery,
};

use crate::UsageError;

/// Hard limits for brute-force runs: `m <= 6` and `n * k <= 25`.
pub const BRUTE_FORCE_MAX_M: usize = 6;
pub const BRUTE_FORCE_MAX_VERTICES: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Dp,
    BruteForce,
    Both,
}

impl Mode {
    fn oracles(self) -> &'static [OracleKind] {
        match self {
            Mode::Dp => &[OracleKind::Dp],
            Mode::BruteForce => &[OracleKind::BruteForce],
            Mode::Both => &[OracleKind::Dp, OracleKind::BruteForce],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleKind {
    Dp,
    BruteForce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_m: usize,
    pub max_n: usize,
    pub max_k: usize,
    pub mode: Mode,
}

impl Bounds {
    fn validate(&self) -> Result<(), UsageError> {
        if self.max_m == 0 || self.max_n == 0 || self.max_k == 0 {
            return Err(UsageError(
                "--max-m, --max-n and --max-k must be at least 1".into(),
            ));
        }
        if self.mode != Mode::Dp
            && (self.max_m > BRUTE_FORCE_MAX_M
                || self.max_n * self.max_k > BRUTE_FORCE_MAX_VERTICES)
        {
            return Err(UsageError(format!(
                "brute-force mode needs max-m <= {BRUTE_FORCE_MAX_M} and max-n * max-k <= {BRUTE_FORCE_MAX_VERTICES}"
            )));
        }
        Ok(())
    }
}

/// What was checked: the formula, its parameters and an optional anchor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckQuery {
    pub formula: &'static str,
    pub m: usize,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub query: CheckQuery,
    #[serde(serialize_with = "as_decimal")]
    pub formula_value: Count,
    #[serde(serialize_with = "as_decimal")]
    pub oracle_value: Count,
    pub agrees: bool,
    pub oracle_kind: OracleKind,
}

fn as_decimal<S: serde::Serializer>(c: &Count, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub summary: Summary,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.agrees)
    }
}

struct Sweep {
    oracles: &'static [OracleKind],
    checks: Vec<Check>,
}

impl Sweep {
    fn record(
        &mut self,
        query: CheckQuery,
        formula_value: Count,
        g: &SimpleGraph,
        anchor: Option<usize>,
        weak: bool,
    ) -> Result<(), UsageError> {
        for &kind in self.oracles {
            let oracle_value = match kind {
                OracleKind::Dp => dp_walk_count(query.m, g, anchor, weak)?,
                OracleKind::BruteForce => brute_force_count(query.m, g, anchor, weak)?,
            };
            self.checks.push(Check {
                query: query.clone(),
                agrees: formula_value == oracle_value,
                formula_value: formula_value.clone(),
                oracle_value,
                oracle_kind: kind,
            });
        }
        Ok(())
    }
}

fn path_query(formula: &'static str, m: usize, n: usize, j: Option<usize>) -> CheckQuery {
    CheckQuery {
        formula,
        m,
        n,
        k: None,
        i: None,
        j,
    }
}

/// Runs the sweep. Checks come out in a fixed order.
pub fn run(bounds: &Bounds) -> Result<VerificationReport, UsageError> {
    bounds.validate()?;
    let started = Instant::now();
    let mut sweep = Sweep {
        oracles: bounds.mode.oracles(),
        checks: Vec::new(),
    };

    for m in 1..=bounds.max_m {
        for n in 1..=bounds.max_n {
            let g = path_graph(n)?;
            for j in 0..n {
                let q = PathQuery::anchored(m, n, j)?;
                let a = Some(j);
                sweep.record(
                    path_query("hom_anchored", m, n, a),
                    hom_anchored(&q)?,
                    &g,
                    a,
                    false,
                )?;
                if m <= n {
                    let reduced = hom_anchored_reduced(&q)?;
                    sweep.record(
                        path_query("hom_anchored_reduced", m, n, a),
                        reduced,
                        &g,
                        a,
                        false,
                    )?;
                    let closed = whom_anchored_closed(&q)?;
                    sweep.record(
                        path_query("whom_anchored_closed", m, n, a),
                        closed,
                        &g,
                        a,
                        true,
                    )?;
                } else {
                    sweep.record(
                        path_query("whom_anchored", m, n, a),
                        whom_anchored(&q)?,
                        &g,
                        a,
                        true,
                    )?;
                }
            }
            sweep.record(
                path_query("hom_total", m, n, None),
                hom_total(m, n)?,
                &g,
                None,
                false,
            )?;
            sweep.record(
                path_query("whom_total", m, n, None),
                whom_total(m, n)?,
                &g,
                None,
                true,
            )?;
        }
    }

    for m in 1..=bounds.max_m {
        for n in 1..=bounds.max_n {
            for k in 1..=bounds.max_k {
                let g = grid_graph(n, k)?;
                for i in 0..n {
                    for j in 0..k {
                        let value = whom_grid_anchored(&GridQuery::anchored(m, n, k, i, j)?)?;
                        let query = CheckQuery {
                            formula: "whom_grid_anchored",
                            m,
                            n,
                            k: Some(k),
                            i: Some(i),
                            j: Some(j),
                        };
                        sweep.record(query, value, &g, Some(i * k + j), true)?;
                    }
                }
                let query = CheckQuery {
                    formula: "whom_grid_total",
                    m,
                    n,
                    k: Some(k),
                    i: None,
                    j: None,
                };
                sweep.record(query, whom_grid_total(m, n, k)?, &g, None, true)?;
            }
        }
    }

    let total = sweep.checks.len();
    let pass = sweep.checks.iter().filter(|c| c.agrees).count();
    Ok(VerificationReport {
        checks: sweep.checks,
        summary: Summary {
            total,
            pass,
            fail: total - pass,
        },
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

#[derive(Serialize)]
struct ReportOutput<'a> {
    query: &'a Bounds,
    report: &'a VerificationReport,
}

/// `{"query": {...}, "report": {...}}`.
pub fn to_json(bounds: &Bounds, report: &VerificationReport) -> String {
    let mut s = serde_json::to_string_pretty(&ReportOutput {
        query: bounds,
        report,
    })
    .expect("report serializes");
    s.push('\n');
    s
}

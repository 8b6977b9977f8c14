//! Anchored path tables and the grid total table, in CSV, JSON or markdown.
//!
//! By default the path tables print the cells `2 <= m <= n`, `j <= 3` and
//! `j <= (n-1)/2`; the remaining anchors follow by the reflection
//! `j -> n-1-j`. `all_anchors` prints every `j < n` instead.

use std::fmt::Write as _;

use serde::Serialize;
use walkcount_core::{hom_anchored, whom_anchored, whom_grid_total, Count, PathQuery};

use crate::UsageError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableKind {
    /// Weak homomorphisms `P_m -> P_n` with `f(0) = j`.
    WhomPath,
    /// Homomorphisms `P_m -> P_n` with `f(0) = j`.
    HomPath,
    /// Weak homomorphisms `P_m -> P_n □ P_k`.
    WhomGrid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableFormat {
    Csv,
    Json,
    Md,
}

const DEFAULT_ROWS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TableSpec {
    pub which: TableKind,
    #[serde(skip)]
    pub format: TableFormat,
    pub m_max: usize,
    pub n_max: usize,
    pub all_anchors: bool,
}

impl TableSpec {
    pub fn new(which: TableKind, format: TableFormat) -> Self {
        TableSpec {
            which,
            format,
            m_max: 8,
            n_max: 8,
            all_anchors: false,
        }
    }

    fn validate(&self) -> Result<(), UsageError> {
        if self.m_max == 0 || self.n_max == 0 {
            return Err(UsageError("--m-max and --n-max must be at least 1".into()));
        }
        if self.all_anchors && self.which == TableKind::WhomGrid {
            return Err(UsageError(
                "--all-anchors applies to path tables only".into(),
            ));
        }
        Ok(())
    }

    fn shows_anchor(&self, n: usize, j: usize) -> bool {
        if self.all_anchors {
            j < n
        } else {
            j <= DEFAULT_ROWS && 2 * j < n
        }
    }
}

/// One cell. `anchor` is `j` for path tables; `k` is set for the grid table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub m: usize,
    pub n: usize,
    pub anchor: Option<usize>,
    pub k: Option<usize>,
    pub count: Count,
}

/// All nonempty cells, ordered by `m`, then `j` (or `n`), then `n` (or `k`).
pub fn cells(spec: &TableSpec) -> Result<Vec<Cell>, UsageError> {
    spec.validate()?;
    let mut out = Vec::new();
    match spec.which {
        TableKind::WhomPath | TableKind::HomPath => {
            for m in 2..=spec.m_max {
                for j in 0..spec.n_max {
                    for n in m..=spec.n_max {
                        if !spec.shows_anchor(n, j) {
                            continue;
                        }
                        let q = PathQuery::anchored(m, n, j)?;
                        let count = if spec.which == TableKind::HomPath {
                            hom_anchored(&q)?
                        } else {
                            whom_anchored(&q)?
                        };
                        out.push(Cell {
                            m,
                            n,
                            anchor: Some(j),
                            k: None,
                            count,
                        });
                    }
                }
            }
        }
        TableKind::WhomGrid => {
            for m in 2..=spec.m_max {
                for n in m..=spec.n_max {
                    for k in m..=spec.n_max {
                        let count = whom_grid_total(m, n, k)?;
                        out.push(Cell {
                            m,
                            n,
                            anchor: None,
                            k: Some(k),
                            count,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn render(spec: &TableSpec) -> Result<String, UsageError> {
    let cells = cells(spec)?;
    Ok(match spec.format {
        TableFormat::Csv => render_csv(spec, &cells),
        TableFormat::Json => render_json(spec, &cells),
        TableFormat::Md => render_md(spec, &cells),
    })
}

fn render_csv(spec: &TableSpec, cells: &[Cell]) -> String {
    let mut s = String::new();
    if spec.which == TableKind::WhomGrid {
        s.push_str("m,n,k,count\n");
        for c in cells {
            let _ = writeln!(s, "{},{},{},{}", c.m, c.n, c.k.unwrap_or_default(), c.count);
        }
    } else {
        s.push_str("m,j,n,count\n");
        for c in cells {
            let _ = writeln!(
                s,
                "{},{},{},{}",
                c.m,
                c.anchor.unwrap_or_default(),
                c.n,
                c.count
            );
        }
    }
    s
}

#[derive(Serialize)]
struct JsonRow {
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<usize>,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    count: String,
}

#[derive(Serialize)]
struct JsonTable<'a> {
    query: &'a TableSpec,
    rows: Vec<JsonRow>,
}

fn render_json(spec: &TableSpec, cells: &[Cell]) -> String {
    let rows = cells
        .iter()
        .map(|c| JsonRow {
            m: c.m,
            j: c.anchor,
            n: c.n,
            k: c.k,
            count: c.count.to_string(),
        })
        .collect();
    let mut s =
        serde_json::to_string_pretty(&JsonTable { query: spec, rows }).expect("table serializes");
    s.push('\n');
    s
}

// Rows are (m, j) or (m, n); columns are n or k from 2 to n_max. Blank
// cells stay blank, and the row label m is printed once per group.
fn render_md(spec: &TableSpec, cells: &[Cell]) -> String {
    let grid = spec.which == TableKind::WhomGrid;
    let columns: Vec<usize> = (2..=spec.n_max).collect();
    let (row_label, col_label) = if grid { ("n", "k") } else { ("j", "n") };

    let mut s = String::new();
    let _ = write!(s, "| m | {row_label} |");
    for c in &columns {
        let _ = write!(s, " {col_label}={c} |");
    }
    s.push('\n');
    s.push_str("|---|---|");
    for _ in &columns {
        s.push_str("---|");
    }
    s.push('\n');

    let key = |c: &Cell| {
        if grid {
            (c.m, c.n)
        } else {
            (c.m, c.anchor.unwrap_or_default())
        }
    };
    let column = |c: &Cell| if grid { c.k.unwrap_or_default() } else { c.n };

    let mut last_m = None;
    let mut idx = 0;
    while idx < cells.len() {
        let (m, row) = key(&cells[idx]);
        let end = idx
            + cells[idx..]
                .iter()
                .take_while(|c| key(c) == (m, row))
                .count();
        let m_label = if last_m == Some(m) {
            String::new()
        } else {
            m.to_string()
        };
        last_m = Some(m);
        let _ = write!(s, "| {m_label} | {row} |");
        for col in &columns {
            match cells[idx..end].iter().find(|c| column(c) == *col) {
                Some(c) => {
                    let _ = write!(s, " {} |", c.count);
                }
                None => s.push_str("  |"),
            }
        }
        s.push('\n');
        idx = end;
    }
    s
}

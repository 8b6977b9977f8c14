use serde::Serialize;
use walkcount_core::{
    hom_anchored, hom_total, ladder_shortest_path_count, shortest_path_count, whom_anchored,
    whom_grid_anchored, whom_grid_total, whom_total, Count, GridQuery, LadderBound, LatticePoint,
    PathQuery,
};

use crate::UsageError;

/// A single counting request, as echoed in JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CountRequest {
    HomPath {
        m: usize,
        n: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        j: Option<usize>,
    },
    WhomPath {
        m: usize,
        n: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        j: Option<usize>,
    },
    WhomGrid {
        m: usize,
        n: usize,
        k: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        i: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        j: Option<usize>,
    },
    Lattice {
        i: u32,
        j: u32,
        k: u32,
        #[serde(skip_serializing_if = "Option::is_none")]
        r: Option<u32>,
    },
}

impl CountRequest {
    pub fn evaluate(&self) -> Result<Count, UsageError> {
        let count = match *self {
            CountRequest::HomPath { m, n, j: Some(j) } => {
                hom_anchored(&PathQuery::anchored(m, n, j)?)?
            }
            CountRequest::HomPath { m, n, j: None } => hom_total(m, n)?,
            CountRequest::WhomPath { m, n, j: Some(j) } => {
                whom_anchored(&PathQuery::anchored(m, n, j)?)?
            }
            CountRequest::WhomPath { m, n, j: None } => whom_total(m, n)?,
            CountRequest::WhomGrid {
                m,
                n,
                k,
                i: Some(i),
                j: Some(j),
            } => whom_grid_anchored(&GridQuery::anchored(m, n, k, i, j)?)?,
            CountRequest::WhomGrid {
                m,
                n,
                k,
                i: None,
                j: None,
            } => whom_grid_total(m, n, k)?,
            CountRequest::WhomGrid { .. } => {
                return Err(UsageError("--i and --j must be given together".into()))
            }
            CountRequest::Lattice { i, j, k, r } => {
                let p = LatticePoint::new(i, j, k);
                match r {
                    Some(r) => ladder_shortest_path_count(LadderBound(r), p),
                    None => shortest_path_count(p),
                }
            }
        };
        Ok(count)
    }
}

#[derive(Serialize)]
struct CountOutput<'a> {
    query: &'a CountRequest,
    count: String,
}

/// `{"query": {...}, "count": "<decimal>"}`.
pub fn to_json(request: &CountRequest, count: &Count) -> String {
    serde_json::to_string(&CountOutput {
        query: request,
        count: count.to_string(),
    })
    .expect("count output serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluates_each_kind() {
        let whom = CountRequest::WhomPath {
            m: 4,
            n: 5,
            j: Some(0),
        };
        assert_eq!(whom.evaluate().unwrap(), 13u32);
        let grid = CountRequest::WhomGrid {
            m: 4,
            n: 4,
            k: 5,
            i: Some(0),
            j: Some(0),
        };
        assert_eq!(grid.evaluate().unwrap(), 43u32);
        let lattice = CountRequest::Lattice {
            i: 2,
            j: 1,
            k: 0,
            r: Some(0),
        };
        assert_eq!(lattice.evaluate().unwrap(), 2u32);
        let total = CountRequest::HomPath {
            m: 2,
            n: 2,
            j: None,
        };
        assert_eq!(total.evaluate().unwrap(), 2u32);
    }

    #[test]
    fn half_anchor_is_rejected() {
        let grid = CountRequest::WhomGrid {
            m: 4,
            n: 4,
            k: 5,
            i: Some(0),
            j: None,
        };
        assert!(grid.evaluate().is_err());
    }

    #[test]
    fn json_shape() {
        let req = CountRequest::WhomPath {
            m: 4,
            n: 5,
            j: Some(1),
        };
        let out = to_json(&req, &req.evaluate().unwrap());
        assert_eq!(
            out,
            r#"{"query":{"kind":"whom-path","m":4,"n":5,"j":1},"count":"22"}"#
        );
    }
}

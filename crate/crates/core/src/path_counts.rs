//! Anchored and total counts of (weak) homomorphisms `P_m -> P_n`.
//!
//! `Hom^j(P_m, P_n)` is the set of homomorphisms with `f(0) = j`; these are
//! walks of `m` vertices in `P_n` starting at `j`. `WHom^j(P_m, P_n)` also
//! allows contracted edges, i.e. walks that may stay in place.
//!
//! The closed forms here transcribe their sums literally. Sums whose lower
//! bound exceeds the upper bound are empty, and coefficients outside their
//! domain are zero (see [`crate::combinatorics`]).

use alloc::vec;
use alloc::vec::Vec;

use crate::combinatorics::binomial;
use crate::lattice::{ladder_shortest_path_count, shortest_path_count, LadderBound, LatticePoint};
use crate::{Count, Error, Result};

/// Parameters `(m, n)` and an optional anchor `j = f(0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathQuery {
    m: usize,
    n: usize,
    anchor: Option<usize>,
}

impl PathQuery {
    /// Unanchored query; `m, n >= 1`.
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroOrder { param: "m" });
        }
        if n == 0 {
            return Err(Error::ZeroOrder { param: "n" });
        }
        Ok(PathQuery { m, n, anchor: None })
    }

    /// Anchored query; `m, n >= 1` and `j < n`.
    pub fn anchored(m: usize, n: usize, j: usize) -> Result<Self> {
        Self::new(m, n)?.with_anchor(j)
    }

    pub fn with_anchor(self, j: usize) -> Result<Self> {
        if j >= self.n {
            return Err(Error::InvalidAnchor {
                anchor: j,
                order: self.n,
            });
        }
        Ok(PathQuery {
            anchor: Some(j),
            ..self
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn anchor(&self) -> Option<usize> {
        self.anchor
    }

    fn require_anchor(&self) -> Result<usize> {
        self.anchor.ok_or(Error::MissingAnchor)
    }

    fn require_m_le_n(&self) -> Result<()> {
        if self.m > self.n {
            Err(Error::OutOfDomain {
                m: self.m,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -(-a).div_euclid(b)
}

/// Accumulates a sum whose individual terms may be negative but whose total
/// is a count.
#[derive(Default)]
struct SignedSum {
    pos: Count,
    neg: Count,
}

impl SignedSum {
    fn add(&mut self, c: Count) {
        self.pos += c;
    }

    fn sub(&mut self, c: Count) {
        self.neg += c;
    }

    fn finish(self) -> Count {
        assert!(
            self.pos >= self.neg,
            "closed form summed to a negative value"
        );
        self.pos.saturating_sub(&self.neg)
    }
}

fn sum_binomials(top: i64, lo: i64, hi: i64) -> Count {
    (lo..=hi).map(|t| binomial(top, t)).sum()
}

fn point(s: i64, t: i64, rest: i64) -> LatticePoint {
    let c = |v: i64| u32::try_from(v).expect("lattice coordinate out of range");
    LatticePoint::new(c(s), c(t), c(rest))
}

fn ladder(r: i64) -> LadderBound {
    LadderBound(u32::try_from(r).expect("ladder width out of range"))
}

/// `|Hom^j(P_m, P_n)|` by the reflected-binomial double sum.
///
/// Valid for every `m, n >= 1`, including `m > n`.
pub fn hom_anchored(q: &PathQuery) -> Result<Count> {
    let j = q.require_anchor()? as i64;
    let (m, n) = (q.m as i64, q.n as i64);
    let lower = ceil_div(m - j - 1, 2).max(0);
    let upper = floor_div(m + n - j - 2, 2).min(m - 1);
    let wraps = floor_div(m + n, n);

    let mut acc = SignedSum::default();
    for i in lower..=upper {
        for t in -wraps..=wraps {
            acc.add(binomial(m - 1, i - t * (n + 1)));
            acc.sub(binomial(m - 1, i + j - t * (n + 1) + 1));
        }
    }
    Ok(acc.finish())
}

/// `|Hom^j(P_m, P_n)|` by the reduced three-sum form, valid for `m <= n`.
pub fn hom_anchored_reduced(q: &PathQuery) -> Result<Count> {
    let j = q.require_anchor()? as i64;
    q.require_m_le_n()?;
    let (m, n) = (q.m as i64, q.n as i64);
    let slack = j - (n - m);

    let mut acc = SignedSum::default();
    acc.add(sum_binomials(
        m - 1,
        ceil_div(slack, 2).max(0),
        ceil_div(m + j, 2) - 1,
    ));
    acc.sub(sum_binomials(m - 1, 0, floor_div(slack, 2) - 1));
    acc.sub(sum_binomials(m - 1, 0, floor_div(m - j - 1, 2) - 1));
    Ok(acc.finish())
}

/// `|WHom^j(P_m, P_n)|` by the four-case lattice sum, valid for `m <= n`.
///
/// Each weak homomorphism is a shortest path to some `(s, t, m-1-s-t)` in
/// the cubic lattice (up-steps, down-steps, stays). The cases split the
/// endpoints by which wall of `P_n` the walk could touch:
///
/// 1. more down-steps than `j`: bottom wall, `j`-ladder;
/// 2. down-steps in `(j-n+m, j]`: neither wall reachable;
/// 3. few down-steps and at most `n-j-1` up-steps: unconstrained;
/// 4. more than `n-j-1` up-steps: top wall, mirrored `(n-j-1)`-ladder.
pub fn whom_anchored_closed(q: &PathQuery) -> Result<Count> {
    let j = q.require_anchor()? as i64;
    q.require_m_le_n()?;
    let (m, n) = (q.m as i64, q.n as i64);
    let top = n - j - 1;

    let mut total = Count::zero();
    for t in (j + 1)..=(j + floor_div(m - j - 1, 2)) {
        for s in (t - j)..=(m - 1 - t) {
            total += ladder_shortest_path_count(ladder(j), point(s, t, m - 1 - s - t));
        }
    }
    for t in (j - n + m + 1).max(0)..=j {
        for s in 0..=(m - 1 - t) {
            total += shortest_path_count(point(s, t, m - 1 - s - t));
        }
    }
    for t in 0..=(j - n + m) {
        for s in 0..=top {
            total += shortest_path_count(point(s, t, m - 1 - s - t));
        }
    }
    for t in (top + 1)..=(top + floor_div(j - n + m, 2)) {
        for s in (t - top)..=(m - 1 - t) {
            total += ladder_shortest_path_count(ladder(top), point(s, t, m - 1 - s - t));
        }
    }
    Ok(total)
}

/// Counts walks of `m` vertices in `P_n` by iterating the tridiagonal
/// transfer operator (plus the identity when `allow_stay`). Starts at the
/// anchor when present, otherwise at every vertex.
pub fn path_walk_dp(q: &PathQuery, allow_stay: bool) -> Count {
    let n = q.n;
    let mut cur: Vec<Count> = match q.anchor {
        Some(j) => {
            let mut v = vec![Count::zero(); n];
            v[j] = Count::one();
            v
        }
        None => vec![Count::one(); n],
    };
    let mut next = vec![Count::zero(); n];
    for _ in 1..q.m {
        for (x, slot) in next.iter_mut().enumerate() {
            let mut s = if allow_stay {
                cur[x].clone()
            } else {
                Count::zero()
            };
            if x > 0 {
                s += &cur[x - 1];
            }
            if x + 1 < n {
                s += &cur[x + 1];
            }
            *slot = s;
        }
        core::mem::swap(&mut cur, &mut next);
    }
    cur.into_iter().sum()
}

/// `|WHom^j(P_m, P_n)|` for any `m`: the closed form when `m <= n`, the
/// transfer-matrix DP otherwise.
pub fn whom_anchored(q: &PathQuery) -> Result<Count> {
    q.require_anchor()?;
    if q.m <= q.n {
        whom_anchored_closed(q)
    } else {
        Ok(path_walk_dp(q, true))
    }
}

/// `|Hom(P_m, P_n)|`, summed over all anchors.
pub fn hom_total(m: usize, n: usize) -> Result<Count> {
    let q = PathQuery::new(m, n)?;
    (0..n).map(|j| hom_anchored(&q.with_anchor(j)?)).sum()
}

/// `|WHom(P_m, P_n)|`, summed over all anchors.
pub fn whom_total(m: usize, n: usize) -> Result<Count> {
    let q = PathQuery::new(m, n)?;
    (0..n).map(|j| whom_anchored(&q.with_anchor(j)?)).sum()
}

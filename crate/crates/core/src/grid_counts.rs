//! Weak homomorphisms from `P_m` into the rectangular grid `P_n □ P_k`.
//!
//! Every step of a partial walk in the grid either moves along the first
//! axis or moves/stays along the second. Fixing the number `h` of
//! first-axis moves splits the walk into a walk of `h + 1` vertices in
//! `P_n` and a partial walk of `m - h` vertices in `P_k`, interleaved in
//! one of `C(m-1, h)` ways.

use alloc::vec::Vec;

use crate::combinatorics::binomial;
use crate::path_counts::{hom_anchored, whom_anchored, PathQuery};
use crate::{Count, Error, Result};

/// Parameters `(m, n, k)` and an optional anchor `(i, j) = f(0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridQuery {
    m: usize,
    n: usize,
    k: usize,
    anchor: Option<(usize, usize)>,
}

impl GridQuery {
    pub fn new(m: usize, n: usize, k: usize) -> Result<Self> {
        for (param, v) in [("m", m), ("n", n), ("k", k)] {
            if v == 0 {
                return Err(Error::ZeroOrder { param });
            }
        }
        Ok(GridQuery {
            m,
            n,
            k,
            anchor: None,
        })
    }

    pub fn anchored(m: usize, n: usize, k: usize, i: usize, j: usize) -> Result<Self> {
        Self::new(m, n, k)?.with_anchor(i, j)
    }

    pub fn with_anchor(self, i: usize, j: usize) -> Result<Self> {
        check_anchor(self.n, self.k, i, j)?;
        Ok(GridQuery {
            anchor: Some((i, j)),
            ..self
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn anchor(&self) -> Option<(usize, usize)> {
        self.anchor
    }
}

fn check_anchor(n: usize, k: usize, i: usize, j: usize) -> Result<()> {
    if i >= n || j >= k {
        Err(Error::InvalidGridAnchor { i, j, n, k })
    } else {
        Ok(())
    }
}

/// `|WHom^{ij}(P_m, P_n □ P_k)|` by the interleaving convolution
/// `Σ_h C(m-1, h) |Hom^i(P_{h+1}, P_n)| |WHom^j(P_{m-h}, P_k)|`.
///
/// Holds for every anchor, midlines and walls included.
pub fn whom_grid_anchored(q: &GridQuery) -> Result<Count> {
    let (i, j) = q.anchor.ok_or(Error::MissingAnchor)?;
    let m = q.m;
    let mut total = Count::zero();
    for h in 0..m {
        let arrangements = binomial(m as i64 - 1, h as i64);
        let first = hom_anchored(&PathQuery::anchored(h + 1, q.n, i)?)?;
        if first.is_zero() {
            continue;
        }
        let second = whom_anchored(&PathQuery::anchored(m - h, q.k, j)?)?;
        total += &(&arrangements * &first) * &second;
    }
    Ok(total)
}

/// `|WHom(P_m, P_n □ P_k)|`.
///
/// Anchors in the same reflection orbit give equal counts, so only the
/// quarter-grid `i < ⌊n/2⌋, j < ⌊k/2⌋` is evaluated (weight 4), plus the
/// middle row/column when `n`/`k` is odd (weight 2) and the centre when
/// both are odd (weight 1).
pub fn whom_grid_total(m: usize, n: usize, k: usize) -> Result<Count> {
    let q = GridQuery::new(m, n, k)?;
    let at = |i: usize, j: usize| whom_grid_anchored(&q.with_anchor(i, j)?);
    let (half_n, half_k) = (n / 2, k / 2);
    let (odd_n, odd_k) = (n % 2 == 1, k % 2 == 1);

    let mut quarter = Count::zero();
    for i in 0..half_n {
        for j in 0..half_k {
            quarter += at(i, j)?;
        }
    }
    let mut total = quarter * 4;
    if odd_n {
        let row: Count = (0..half_k).map(|j| at(half_n, j)).sum::<Result<Count>>()?;
        total += row * 2;
    }
    if odd_k {
        let col: Count = (0..half_n).map(|i| at(i, half_k)).sum::<Result<Count>>()?;
        total += col * 2;
    }
    if odd_n && odd_k {
        total += at(half_n, half_k)?;
    }
    Ok(total)
}

/// The orbit of `(i, j)` under `i -> n-1-i` and `j -> k-1-j`, sorted and
/// deduplicated (size 1, 2 or 4).
pub fn anchor_orbit(n: usize, k: usize, i: usize, j: usize) -> Result<Vec<(usize, usize)>> {
    check_anchor(n, k, i, j)?;
    let (fi, fj) = (n - 1 - i, k - 1 - j);
    let mut orbit = alloc::vec![(i, j), (fi, j), (i, fj), (fi, fj)];
    orbit.sort_unstable();
    orbit.dedup();
    Ok(orbit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn anchored(m: usize, n: usize, k: usize, i: usize, j: usize) -> Count {
        whom_grid_anchored(&GridQuery::anchored(m, n, k, i, j).unwrap()).unwrap()
    }

    /// Plain DP over grid cells: weak step = stay or move to a 4-neighbour.
    fn grid_dp(m: usize, n: usize, k: usize, start: Option<(usize, usize)>) -> u64 {
        let mut cur = vec![vec![0u64; k]; n];
        match start {
            Some((i, j)) => cur[i][j] = 1,
            None => cur.iter_mut().for_each(|r| r.fill(1)),
        }
        for _ in 1..m {
            let mut next = vec![vec![0u64; k]; n];
            for a in 0..n {
                for b in 0..k {
                    let mut s = cur[a][b];
                    if a > 0 {
                        s += cur[a - 1][b];
                    }
                    if a + 1 < n {
                        s += cur[a + 1][b];
                    }
                    if b > 0 {
                        s += cur[a][b - 1];
                    }
                    if b + 1 < k {
                        s += cur[a][b + 1];
                    }
                    next[a][b] = s;
                }
            }
            cur = next;
        }
        cur.iter().flatten().sum()
    }

    #[test]
    fn anchored_examples() {
        assert_eq!(anchored(4, 4, 5, 0, 0), 43u32);
        assert_eq!(anchored(1, 6, 7, 2, 3), 1u32);
        assert_eq!(anchored(2, 2, 2, 0, 0), 3u32);
    }

    #[test]
    fn total_examples() {
        assert_eq!(whom_grid_total(2, 2, 2).unwrap(), 12u32);
        assert_eq!(whom_grid_total(5, 6, 7).unwrap(), 17048u32);
        assert_eq!(whom_grid_total(8, 8, 8).unwrap(), 2951832u32);
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(
            anchor_orbit(4, 5, 0, 0).unwrap(),
            vec![(0, 0), (0, 4), (3, 0), (3, 4)]
        );
        assert_eq!(anchor_orbit(5, 5, 2, 2).unwrap(), vec![(2, 2)]);
        assert_eq!(anchor_orbit(5, 4, 2, 1).unwrap(), vec![(2, 1), (2, 2)]);
        assert!(anchor_orbit(5, 4, 5, 0).is_err());
    }

    #[test]
    fn rejects_bad_queries() {
        assert_eq!(
            GridQuery::new(0, 2, 2),
            Err(Error::ZeroOrder { param: "m" })
        );
        assert_eq!(
            GridQuery::new(2, 2, 0),
            Err(Error::ZeroOrder { param: "k" })
        );
        assert_eq!(
            GridQuery::anchored(3, 2, 3, 1, 3),
            Err(Error::InvalidGridAnchor {
                i: 1,
                j: 3,
                n: 2,
                k: 3
            })
        );
        let q = GridQuery::new(3, 3, 3).unwrap();
        assert_eq!(whom_grid_anchored(&q), Err(Error::MissingAnchor));
    }

    #[test]
    fn convolution_matches_grid_dp_everywhere() {
        for m in 1..=6 {
            for n in 1..=6 {
                for k in 1..=6 {
                    for i in 0..n {
                        for j in 0..k {
                            assert_eq!(
                                anchored(m, n, k, i, j),
                                grid_dp(m, n, k, Some((i, j))),
                                "m={m} n={n} k={k} ({i},{j})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parity_total_equals_anchor_sum() {
        for m in 1..=6 {
            for n in 1..=6 {
                for k in 1..=6 {
                    let plain: Count = (0..n)
                        .flat_map(|i| (0..k).map(move |j| (i, j)))
                        .map(|(i, j)| anchored(m, n, k, i, j))
                        .sum();
                    assert_eq!(whom_grid_total(m, n, k).unwrap(), plain, "{m} {n} {k}");
                    assert_eq!(plain, grid_dp(m, n, k, None));
                }
            }
        }
    }

    #[test]
    fn transpose_symmetry() {
        for m in 1..=8 {
            for n in 1..=8 {
                for k in n + 1..=8 {
                    assert_eq!(
                        whom_grid_total(m, n, k).unwrap(),
                        whom_grid_total(m, k, n).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn constant_on_orbits() {
        for m in 1..=5 {
            for n in 1..=5 {
                for k in 1..=5 {
                    for i in 0..n {
                        for j in 0..k {
                            let v = anchored(m, n, k, i, j);
                            for (a, b) in anchor_orbit(n, k, i, j).unwrap() {
                                assert_eq!(anchored(m, n, k, a, b), v);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn degenerate_grid_is_a_path() {
        for n in 1..=6 {
            for m in 1..=n {
                assert_eq!(
                    whom_grid_total(m, n, 1).unwrap(),
                    crate::path_counts::whom_total(m, n).unwrap()
                );
            }
        }
    }
}

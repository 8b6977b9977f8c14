//! Shortest-path counts in the cubic lattice and the r-ladder cubic lattice.
//!
//! A shortest path from the origin to `(i, j, k)` is a sequence of `i`
//! first-axis, `j` second-axis and `k` third-axis unit steps. The r-ladder
//! lattice keeps only the points with `j - i <= r`; paths that would cross
//! into `j - i = r + 1` are removed by reflecting their prefix, which maps
//! the target `(i, j, k)` to `(j - r - 1, i + r + 1, k)`.
//!
//! For weak homomorphisms from a path anchored at vertex `r`, the three
//! axes are "step up", "step down" and "stay", and the ladder bound keeps
//! the walk from falling below vertex 0.

use crate::combinatorics::multinomial3;
use crate::Count;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

impl LatticePoint {
    pub const fn new(i: u32, j: u32, k: u32) -> Self {
        LatticePoint { i, j, k }
    }
}

/// Width `r` of the r-ladder lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LadderBound(pub u32);

/// `M(i, j, k)`: the number of shortest paths from the origin to `p`.
pub fn shortest_path_count(p: LatticePoint) -> Count {
    multinomial3(p.i.into(), p.j.into(), p.k.into())
}

/// `M_r(i, j, k)`: shortest paths from the origin to `p` that never visit a
/// point with `j - i > r`.
///
/// Inside the ladder this is the reflection difference
/// `M(i, j, k) - M(j - r - 1, i + r + 1, k)`. Outside it (`j - i > r`) the
/// difference is never positive and the count is 0.
pub fn ladder_shortest_path_count(r: LadderBound, p: LatticePoint) -> Count {
    let (i, j, k, r) = (
        i64::from(p.i),
        i64::from(p.j),
        i64::from(p.k),
        i64::from(r.0),
    );
    let all = multinomial3(i, j, k);
    let crossing = multinomial3(j - r - 1, i + r + 1, k);
    all.saturating_sub(&crossing)
}

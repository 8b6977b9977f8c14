//! Ground-truth counters over explicit graphs.
//!
//! [`brute_force_count`] extends maps one vertex at a time and
//! [`dp_walk_count`] iterates the adjacency operator. Neither uses any of
//! the closed forms, so they can arbitrate them.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Count, Error, Result};

/// Undirected, loop-free graph on vertices `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder { param: "order" });
        }
        let mut adjacency = vec![Vec::new(); order];
        for (u, v) in edges {
            if u == v || u >= order || v >= order {
                return Err(Error::InvalidEdge { u, v, order });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        Ok(SimpleGraph { adjacency })
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency
            .get(u)
            .is_some_and(|n| n.binary_search(&v).is_ok())
    }

    /// The same graph with vertex `v` renamed to `perm[v]`.
    ///
    /// # Panics
    ///
    /// If `perm` is not a permutation of `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        let n = self.order();
        let mut seen = vec![false; n];
        assert_eq!(perm.len(), n, "permutation length");
        for &p in perm {
            assert!(
                p < n && !core::mem::replace(&mut seen[p], true),
                "not a permutation"
            );
        }
        SimpleGraph::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("relabelling preserves validity")
    }
}

/// `P_n`: vertices `0..n`, edges `{i, i+1}`.
pub fn path_graph(n: usize) -> Result<SimpleGraph> {
    if n == 0 {
        return Err(Error::ZeroOrder { param: "n" });
    }
    SimpleGraph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `G₁ □ G₂`, with `(a, u)` encoded as `a * order(G₂) + u`.
pub fn cartesian_product(g1: &SimpleGraph, g2: &SimpleGraph) -> SimpleGraph {
    let k = g2.order();
    let id = |a: usize, u: usize| a * k + u;
    let mut edges = Vec::with_capacity(g1.order() * g2.edge_count() + g1.edge_count() * k);
    for a in 0..g1.order() {
        edges.extend(g2.edges().map(|(u, v)| (id(a, u), id(a, v))));
    }
    for (a, b) in g1.edges() {
        edges.extend((0..k).map(|u| (id(a, u), id(b, u))));
    }
    SimpleGraph::from_edges(g1.order() * k, edges).expect("product of valid graphs is valid")
}

/// `P_n □ P_k`.
pub fn grid_graph(n: usize, k: usize) -> Result<SimpleGraph> {
    Ok(cartesian_product(&path_graph(n)?, &path_graph(k)?))
}

fn check(m: usize, g: &SimpleGraph, anchor: Option<usize>) -> Result<()> {
    if m == 0 {
        return Err(Error::ZeroOrder { param: "m" });
    }
    match anchor {
        Some(a) if a >= g.order() => Err(Error::InvalidAnchor {
            anchor: a,
            order: g.order(),
        }),
        _ => Ok(()),
    }
}

/// Counts maps `f: {0..m-1} -> V(g)` whose consecutive images are adjacent
/// (or equal, when `weak`), with `f(0) = anchor` if given, by listing them
/// one at a time.
pub fn brute_force_count(
    m: usize,
    g: &SimpleGraph,
    anchor: Option<usize>,
    weak: bool,
) -> Result<Count> {
    check(m, g, anchor)?;
    let starts: Vec<usize> = match anchor {
        Some(a) => vec![a],
        None => (0..g.order()).collect(),
    };
    let mut hits = 0u64;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for s in starts {
        stack.push((s, 1));
        while let Some((v, len)) = stack.pop() {
            if len == m {
                hits += 1;
                continue;
            }
            // Pushed in reverse so that the lowest label is explored first.
            for &w in g.neighbors(v).iter().rev() {
                stack.push((w, len + 1));
            }
            if weak {
                stack.push((v, len + 1));
            }
        }
    }
    Ok(Count::from(hits))
}

/// Same contract as [`brute_force_count`], computed by `m - 1` applications
/// of the adjacency operator (plus the identity when `weak`).
pub fn dp_walk_count(
    m: usize,
    g: &SimpleGraph,
    anchor: Option<usize>,
    weak: bool,
) -> Result<Count> {
    check(m, g, anchor)?;
    let n = g.order();
    let mut cur = match anchor {
        Some(a) => {
            let mut v = vec![Count::zero(); n];
            v[a] = Count::one();
            v
        }
        None => vec![Count::one(); n],
    };
    for _ in 1..m {
        cur = (0..n)
            .map(|v| {
                let mut s = if weak { cur[v].clone() } else { Count::zero() };
                for &u in g.neighbors(v) {
                    s += &cur[u];
                }
                s
            })
            .collect();
    }
    Ok(cur.into_iter().sum())
}

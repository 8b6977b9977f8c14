//! Exact counting of homomorphisms and weak homomorphisms from paths.
//!
//! A map `f: V(P_m) -> V(H)` is a *homomorphism* when every edge of the
//! path lands on an edge of `H`, and a *weak homomorphism* when every edge
//! lands on an edge or is contracted to a single vertex. Because the domain
//! is a path, these maps are exactly the walks (resp. walks with optional
//! stationary steps) of `m` vertices in `H`.
//!
//! The crate evaluates closed forms for anchored counts into paths
//! ([`path_counts`]) and rectangular grids ([`grid_counts`]), built on
//! lattice path counts ([`lattice`]) and exact binomials
//! ([`combinatorics`]). [`oracle`] holds independent ground-truth engines
//! used to check every closed form.
//!
//! Everything here is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod combinatorics;
mod count;
mod error;
pub mod grid_counts;
pub mod lattice;
pub mod oracle;
pub mod path_counts;

pub use count::{Count, ParseCountError};
pub use error::Error;
pub use grid_counts::{anchor_orbit, whom_grid_anchored, whom_grid_total, GridQuery};
pub use lattice::{ladder_shortest_path_count, shortest_path_count, LadderBound, LatticePoint};
pub use oracle::{
    brute_force_count, cartesian_product, dp_walk_count, grid_graph, path_graph, SimpleGraph,
};
pub use path_counts::{
    hom_anchored, hom_anchored_reduced, hom_total, path_walk_dp, whom_anchored,
    whom_anchored_closed, whom_total, PathQuery,
};

pub type Result<T, E = Error> = core::result::Result<T, E>;

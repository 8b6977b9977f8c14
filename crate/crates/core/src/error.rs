use core::fmt;

/// Rejected query parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A graph order (`m`, `n` or `k`) was zero.
    ZeroOrder { param: &'static str },
    /// The anchor vertex lies outside the codomain.
    InvalidAnchor { anchor: usize, order: usize },
    /// A grid anchor lies outside `P_n □ P_k`.
    InvalidGridAnchor {
        i: usize,
        j: usize,
        n: usize,
        k: usize,
    },
    /// An anchored operation was called on an unanchored query.
    MissingAnchor,
    /// An edge is a loop or names a vertex outside the graph.
    InvalidEdge { u: usize, v: usize, order: usize },
    /// A closed form was asked for parameters outside its domain (`m > n`).
    OutOfDomain { m: usize, n: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroOrder { param } => write!(f, "{param} must be at least 1"),
            Error::InvalidAnchor { anchor, order } => {
                write!(
                    f,
                    "anchor {anchor} is not a vertex of a graph of order {order}"
                )
            }
            Error::InvalidGridAnchor { i, j, n, k } => {
                write!(f, "anchor ({i}, {j}) is outside the {n}x{k} grid")
            }
            Error::InvalidEdge { u, v, order } => {
                write!(f, "invalid edge {{{u}, {v}}} in a graph of order {order}")
            }
            Error::MissingAnchor => f.write_str("operation requires an anchored query"),
            Error::OutOfDomain { m, n } => {
                write!(f, "closed form requires m <= n, got m = {m}, n = {n}")
            }
        }
    }
}

impl core::error::Error for Error {}

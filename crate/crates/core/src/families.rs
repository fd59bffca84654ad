//! Closed-form path numbers for paths, cycles, complete and complete
//! bipartite graphs, plus builders for those graphs so the formulas can be
//! checked against the exact solver. The formulas are validated by the
//! sweep tests, never used as shortcuts inside the solver.

use core::fmt;

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyError {
    BadOrder { n: usize, family: &'static str },
    KOutOfRange { k: usize, n: usize },
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyError::BadOrder { n, family } => {
                write!(f, "order {n} invalid for {family}")
            }
            FamilyError::KOutOfRange { k, n } => write!(f, "k = {k} outside 1..={n}"),
        }
    }
}

impl core::error::Error for FamilyError {}

fn check_k(k: usize, n: usize) -> Result<(), FamilyError> {
    if k < 1 || k > n {
        Err(FamilyError::KOutOfRange { k, n })
    } else {
        Ok(())
    }
}

/// floor(n/k) for the path on n vertices.
pub fn psi_path(n: usize, k: usize) -> Result<usize, FamilyError> {
    check_k(k, n)?;
    Ok(n / k)
}

/// ceil(n/k) for the cycle on n vertices (n >= 3).
pub fn psi_cycle(n: usize, k: usize) -> Result<usize, FamilyError> {
    if n < 3 {
        return Err(FamilyError::BadOrder { n, family: "cycle" });
    }
    check_k(k, n)?;
    Ok(n.div_ceil(k))
}

/// n-k+1 for the complete graph on n vertices.
pub fn psi_complete(n: usize, k: usize) -> Result<usize, FamilyError> {
    check_k(k, n)?;
    Ok(n - k + 1)
}

/// Path numbers of the complete bipartite graph with parts a, b:
/// a+b at k = 1, min{a,b} - floor(k/2) + 1 while a k-vertex path exists
/// (k <= 2 min{a,b} + 1), and 0 beyond. Values of k past a+b are allowed
/// and fall in the 0 branch, since no such path can exist.
pub fn psi_complete_bipartite(a: usize, b: usize, k: usize) -> Result<usize, FamilyError> {
    if a < 1 || b < 1 {
        return Err(FamilyError::BadOrder {
            n: a.min(b),
            family: "complete bipartite",
        });
    }
    if k < 1 {
        return Err(FamilyError::KOutOfRange { k, n: a + b });
    }
    let small = a.min(b);
    Ok(if k == 1 {
        a + b
    } else if k <= 2 * small + 1 {
        small - k / 2 + 1
    } else {
        0
    })
}

/// The path 0-1-...-(n-1).
pub fn build_path(n: usize) -> Result<Graph, FamilyError> {
    let mut g = Graph::empty(n).map_err(|_| FamilyError::BadOrder { n, family: "path" })?;
    for v in 1..n {
        g.add_edge(v - 1, v).expect("consecutive vertices");
    }
    Ok(g)
}

/// The cycle 0-1-...-(n-1)-0, n >= 3.
pub fn build_cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::BadOrder { n, family: "cycle" });
    }
    let mut g = build_path(n)?;
    g.add_edge(n - 1, 0).expect("in range");
    Ok(g)
}

pub fn build_complete(n: usize) -> Result<Graph, FamilyError> {
    let mut g = Graph::empty(n).map_err(|_| FamilyError::BadOrder { n, family: "complete" })?;
    for v in 1..n {
        for u in 0..v {
            g.add_edge(u, v).expect("in range");
        }
    }
    Ok(g)
}

/// Complete bipartite graph; the first part occupies vertices 0..a.
pub fn build_complete_bipartite(a: usize, b: usize) -> Result<Graph, FamilyError> {
    if a < 1 || b < 1 {
        return Err(FamilyError::BadOrder {
            n: a.min(b),
            family: "complete bipartite",
        });
    }
    let mut g = Graph::empty(a + b).map_err(|_| FamilyError::BadOrder {
        n: a + b,
        family: "complete bipartite",
    })?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v).expect("in range");
        }
    }
    Ok(g)
}

//! Brute-force reference for the path numbers, kept deliberately separate
//! from the subset-DP solver: candidate covers are enumerated in order of
//! size and each one is tested with a fresh recursive path search. Slow,
//! obviously correct, and used to cross-check the fast path.

use core::fmt;

use crate::graph::Graph;

/// The brute-force search is practical up to this order.
pub const MAX_BRUTE_N: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    TooLarge { n: usize },
    KOutOfRange { k: usize, n: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OracleError::TooLarge { n } => {
                write!(f, "brute-force oracle supports n <= {MAX_BRUTE_N}, got {n}")
            }
            OracleError::KOutOfRange { k, n } => write!(f, "k = {k} outside 1..={n}"),
        }
    }
}

impl core::error::Error for OracleError {}

/// Depth-first search for a simple path on `k` vertices avoiding `blocked`.
fn extend_path(adj: &[u32], v: usize, visited: u32, depth: usize, k: usize, blocked: u32) -> bool {
    if depth == k {
        return true;
    }
    let mut candidates = adj[v] & !visited & !blocked;
    while candidates != 0 {
        let u = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        if extend_path(adj, u, visited | (1 << u), depth + 1, k, blocked) {
            return true;
        }
    }
    false
}

fn has_k_path_avoiding(adj: &[u32], n: usize, k: usize, blocked: u32) -> bool {
    for start in 0..n {
        if blocked & (1 << start) != 0 {
            continue;
        }
        if extend_path(adj, start, 1 << start, 1, k, blocked) {
            return true;
        }
    }
    false
}

/// Minimum cover size against k-vertex paths, by exhaustive search:
/// subsets are tried in increasing size, smallest-mask first within a size.
pub fn brute_force_psi_k(g: &Graph, k: usize) -> Result<usize, OracleError> {
    let n = g.order();
    if n > MAX_BRUTE_N {
        return Err(OracleError::TooLarge { n });
    }
    if k < 1 || k > n {
        return Err(OracleError::KOutOfRange { k, n });
    }
    let adj: alloc::vec::Vec<u32> = (0..n).map(|v| g.neighbours(v).0).collect();
    for size in 0..=n {
        let mut found = None;
        for_each_subset_of_size(n, size, |blocked| {
            if found.is_none() && !has_k_path_avoiding(&adj, n, k, blocked) {
                found = Some(size);
            }
        });
        if let Some(size) = found {
            return Ok(size);
        }
    }
    unreachable!("removing all vertices always covers")
}

/// Visits every n-bit mask with exactly `size` bits set, in ascending
/// numeric order (Gosper's hack).
fn for_each_subset_of_size(n: usize, size: usize, mut visit: impl FnMut(u32)) {
    if size == 0 {
        visit(0);
        return;
    }
    if size > n {
        return;
    }
    let end = 1u64 << n;
    let mut mask: u64 = (1u64 << size) - 1;
    while mask < end {
        visit(mask as u32);
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_complete, build_path};
    use crate::solver;

    #[test]
    fn triangle_vertex_cover() {
        assert_eq!(brute_force_psi_k(&build_complete(3).unwrap(), 2).unwrap(), 2);
    }

    #[test]
    fn k_out_of_range() {
        let p4 = build_path(4).unwrap();
        assert_eq!(
            brute_force_psi_k(&p4, 5),
            Err(OracleError::KOutOfRange { k: 5, n: 4 })
        );
    }

    #[test]
    fn agrees_with_solver_on_small_families() {
        for n in 1..=6 {
            let graphs = [
                build_path(n).ok(),
                build_complete(n).ok(),
                (n >= 3).then(|| crate::families::build_cycle(n).unwrap()),
            ];
            for g in graphs.into_iter().flatten() {
                for k in 1..=n {
                    assert_eq!(
                        brute_force_psi_k(&g, k).unwrap(),
                        solver::psi_k(&g, k).unwrap(),
                        "mismatch for n={n} k={k}"
                    );
                }
            }
        }
    }
}

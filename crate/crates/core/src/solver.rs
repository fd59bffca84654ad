//! Exact path numbers via dynamic programming over vertex subsets.
//!
//! The engine is a table, indexed by subset, of the endpoints of simple
//! paths spanning exactly that subset. From it we derive, for every subset
//! T, the order of a longest path inside the induced subgraph G[T]; a set
//! S is then a cover against k-vertex paths exactly when the longest path
//! avoiding S has fewer than k vertices. One table therefore answers every
//! k at once.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet};
use crate::sequence::PathSequence;

/// Largest order the subset tables accept: 2^24 entries is the point where
/// the tables stop being comfortably memory-resident.
pub const MAX_SOLVER_N: usize = 24;

/// Cap for exhaustive enumeration of all minimum covers (a full 2^n sweep).
pub const MAX_COVER_ENUM_N: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolverError {
    /// Graph order beyond the table cap.
    TooLarge { n: usize, cap: usize },
    /// k outside 1..=n.
    KOutOfRange { k: usize, n: usize },
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SolverError::TooLarge { n, cap } => {
                write!(f, "graph on {n} vertices exceeds the solver cap of {cap}")
            }
            SolverError::KOutOfRange { k, n } => {
                write!(f, "k = {k} outside 1..={n}")
            }
        }
    }
}

impl core::error::Error for SolverError {}

/// For each vertex subset (as mask index) the set of vertices that end a
/// simple path visiting exactly that subset.
pub struct PathWitnessTable {
    n: usize,
    reach: Vec<u32>,
}

impl PathWitnessTable {
    /// Endpoint set for a subset; empty means no spanning path of that subset.
    #[inline]
    pub fn endpoints(&self, subset: VertexSet) -> VertexSet {
        VertexSet(self.reach[subset.0 as usize])
    }

    pub fn order(&self) -> usize {
        self.n
    }
}

/// For each vertex subset T, the maximum order of a simple path contained
/// in G[T] (0 for the empty set).
pub struct LongestPathTable {
    n: usize,
    f: Vec<u8>,
}

impl LongestPathTable {
    #[inline]
    pub fn longest_within(&self, subset: VertexSet) -> usize {
        self.f[subset.0 as usize] as usize
    }

    /// Order of a longest path in the whole graph.
    pub fn longest(&self) -> usize {
        self.f[self.f.len() - 1] as usize
    }

    pub fn order(&self) -> usize {
        self.n
    }
}

fn check_order(g: &Graph) -> Result<(), SolverError> {
    if g.order() > MAX_SOLVER_N {
        Err(SolverError::TooLarge {
            n: g.order(),
            cap: MAX_SOLVER_N,
        })
    } else {
        Ok(())
    }
}

/// Builds the endpoint table.
///
/// reach[{v}] = {v}; v ends a path spanning `mask` iff some neighbour of v
/// ends a path spanning `mask \ {v}`. Masks are visited in increasing
/// order, so subsets are ready before supersets. O(2^n * n).
pub fn path_witness_table(g: &Graph) -> Result<PathWitnessTable, SolverError> {
    check_order(g)?;
    let n = g.order();
    let adj: Vec<u32> = (0..n).map(|v| g.neighbours(v).0).collect();
    let size = 1usize << n;
    let mut reach = vec![0u32; size];
    for v in 0..n {
        reach[1 << v] = 1 << v;
    }
    for mask in 1..size as u32 {
        if mask.count_ones() < 2 {
            continue;
        }
        let mut ends = 0u32;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if reach[(mask ^ (1 << v)) as usize] & adj[v] != 0 {
                ends |= 1 << v;
            }
        }
        reach[mask as usize] = ends;
    }
    Ok(PathWitnessTable { n, reach })
}

/// Collapses the witness table into longest-path orders per subset via a
/// superset sweep: f[T] = max over b in T of f[T \ {b}], seeded with |T|
/// where T itself carries a spanning path.
pub fn longest_path_table(g: &Graph) -> Result<LongestPathTable, SolverError> {
    let witness = path_witness_table(g)?;
    let n = witness.n;
    let size = 1usize << n;
    let mut f = vec![0u8; size];
    for mask in 1..size {
        if witness.reach[mask] != 0 {
            f[mask] = (mask as u32).count_ones() as u8;
        }
    }
    for b in 0..n {
        let high = 1usize << b;
        for mask in 0..size {
            if mask & high != 0 {
                let without = f[mask ^ high];
                if without > f[mask] {
                    f[mask] = without;
                }
            }
        }
    }
    Ok(LongestPathTable { n, f })
}

/// Minimum size of a vertex set whose removal leaves no path on k vertices.
pub fn psi_k(g: &Graph, k: usize) -> Result<usize, SolverError> {
    let n = g.order();
    if k < 1 || k > n {
        return Err(SolverError::KOutOfRange { k, n });
    }
    if k == 1 {
        // every vertex alone is a path on one vertex
        return Ok(n);
    }
    Ok(sequence_from_table(&longest_path_table(g)?).psi(k))
}

/// The full vector (psi_1, ..., psi_n), computed from a single table pass.
pub fn path_sequence(g: &Graph) -> Result<PathSequence, SolverError> {
    Ok(sequence_from_table(&longest_path_table(g)?))
}

/// All path numbers from one longest-path table.
///
/// psi_k = n - max{ |T| : longest path in G[T] < k }, so one scan
/// recording, per longest-path value, the largest subset attaining it
/// yields the whole sequence.
pub fn sequence_from_table(table: &LongestPathTable) -> PathSequence {
    let n = table.n;
    let mut largest_by_len = vec![0u8; n + 1];
    for (mask, &len) in table.f.iter().enumerate() {
        let size = (mask as u32).count_ones() as u8;
        if size > largest_by_len[len as usize] {
            largest_by_len[len as usize] = size;
        }
    }
    let mut best = 0u8;
    let mut values = Vec::with_capacity(n);
    for k in 1..=n {
        // largest subset whose longest path has < k vertices
        if largest_by_len[k - 1] > best {
            best = largest_by_len[k - 1];
        }
        values.push(n as u8 - best);
    }
    PathSequence::new(values)
}

/// Every minimum cover against k-vertex paths, in ascending mask order.
pub fn minimum_k_pvcs(g: &Graph, k: usize) -> Result<Vec<VertexSet>, SolverError> {
    let n = g.order();
    if k <= 1 || k > n {
        return Err(SolverError::KOutOfRange { k, n });
    }
    if n > MAX_COVER_ENUM_N {
        return Err(SolverError::TooLarge {
            n,
            cap: MAX_COVER_ENUM_N,
        });
    }
    let table = longest_path_table(g)?;
    let target = sequence_from_table(&table).psi(k) as u32;
    let full = g.vertices().0;
    let mut covers = Vec::new();
    for s in 0..=full {
        if s.count_ones() == target && table.f[(full & !s) as usize] < k as u8 {
            covers.push(VertexSet(s));
        }
    }
    Ok(covers)
}

/// Whether some simple path visits every vertex.
pub fn has_hamilton_path(g: &Graph) -> Result<bool, SolverError> {
    let witness = path_witness_table(g)?;
    Ok(!witness.endpoints(g.vertices()).is_empty())
}

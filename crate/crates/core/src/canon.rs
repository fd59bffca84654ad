//! Canonical forms for small graphs and exhaustive enumeration of
//! connected graphs up to isomorphism.
//!
//! The canonical code of a graph is the lexicographically smallest
//! upper-triangle adjacency string (column-major bit order, matching
//! graph6) over all relabelings. Two graphs are isomorphic exactly when
//! their codes agree. The search places vertices position by position and
//! keeps only the partial labelings whose emitted bits are minimal so far,
//! which prunes all branches that cannot reach the minimum; it is exact
//! brute force, just with the hopeless permutations cut early.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

/// Largest order for which exact canonicalization is offered.
///
/// Codes use one bit per vertex pair, so 9 vertices need 36 bits; the
/// permutation search stays fast at this size.
pub const MAX_CANON_N: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonError {
    /// Order beyond [`MAX_CANON_N`].
    TooLarge { n: usize },
    /// Enumeration is only built in for 2..=7 vertices.
    EnumerationRange { n: usize },
}

impl fmt::Display for CanonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CanonError::TooLarge { n } => {
                write!(f, "exact canonicalization supports n <= {MAX_CANON_N}, got {n}")
            }
            CanonError::EnumerationRange { n } => {
                write!(
                    f,
                    "built-in enumeration covers 2..=7 vertices, got {n}; ingest a graph6 file instead"
                )
            }
        }
    }
}

impl core::error::Error for CanonError {}

/// A relabeling-invariant code: equal codes iff isomorphic graphs.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    n: u8,
    code: u64,
}

impl CanonicalForm {
    /// The packed upper-triangle bits of the minimal labeling.
    pub fn code(&self) -> u64 {
        self.code
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }
}

#[derive(Copy, Clone)]
struct Partial {
    perm: [u8; MAX_CANON_N],
    used: u16,
}

/// Reusable scratch buffers for the canonical search. One instance per
/// thread; `canonical_form` makes a throwaway one.
pub struct Canonicalizer {
    frontier: Vec<Partial>,
    next: Vec<Partial>,
}

impl Canonicalizer {
    pub fn new() -> Canonicalizer {
        Canonicalizer {
            frontier: Vec::new(),
            next: Vec::new(),
        }
    }

    /// Computes the canonical form of `g`; requires `g.order() <= MAX_CANON_N`.
    pub fn canonical_form(&mut self, g: &Graph) -> Result<CanonicalForm, CanonError> {
        let n = g.order();
        if n > MAX_CANON_N {
            return Err(CanonError::TooLarge { n });
        }
        let adj: Vec<u32> = (0..n).map(|v| g.neighbours(v).0).collect();

        self.frontier.clear();
        for v in 0..n {
            let mut perm = [0u8; MAX_CANON_N];
            perm[0] = v as u8;
            self.frontier.push(Partial {
                perm,
                used: 1 << v,
            });
        }

        let mut code: u64 = 0;
        for pos in 1..n {
            let mut best = u32::MAX;
            self.next.clear();
            for state in &self.frontier {
                let mut remaining = !state.used & ((1u16 << n) - 1);
                while remaining != 0 {
                    let v = remaining.trailing_zeros() as usize;
                    remaining &= remaining - 1;
                    // bits (perm[0],v), (perm[1],v), ..., most significant first
                    let mut bits = 0u32;
                    for i in 0..pos {
                        bits = (bits << 1) | ((adj[v] >> state.perm[i]) & 1);
                    }
                    if bits > best {
                        continue;
                    }
                    if bits < best {
                        best = bits;
                        self.next.clear();
                    }
                    let mut ext = *state;
                    ext.perm[pos] = v as u8;
                    ext.used |= 1 << v;
                    self.next.push(ext);
                }
            }
            code = (code << pos) | best as u64;
            core::mem::swap(&mut self.frontier, &mut self.next);
        }

        Ok(CanonicalForm { n: n as u8, code })
    }
}

impl Default for Canonicalizer {
    fn default() -> Self {
        Canonicalizer::new()
    }
}

/// Canonical form of a single graph. For bulk work prefer a
/// [`Canonicalizer`], which reuses its buffers across calls.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    Canonicalizer::new().canonical_form(g)
}

/// Streams one representative per isomorphism class of connected graphs
/// on `n` vertices, for `2 <= n <= 7`.
///
/// Walks all `2^(n(n-1)/2)` labeled graphs in ascending edge-mask order,
/// keeps the connected ones, and dedupes by canonical form; each class is
/// yielded at its first-seen labeled representative, so the stream order
/// is deterministic.
pub fn enumerate_connected(n: usize) -> Result<ConnectedGraphs, CanonError> {
    if !(2..=7).contains(&n) {
        return Err(CanonError::EnumerationRange { n });
    }
    Ok(ConnectedGraphs {
        n,
        next_mask: 0,
        end: 1u32 << (n * (n - 1) / 2),
        seen: BTreeSet::new(),
        canon: Canonicalizer::new(),
    })
}

pub struct ConnectedGraphs {
    n: usize,
    next_mask: u32,
    end: u32,
    seen: BTreeSet<u64>,
    canon: Canonicalizer,
}

impl ConnectedGraphs {
    /// Rebuilds adjacency masks from a packed upper-triangle edge mask.
    fn graph_of(&self, edge_mask: u32) -> Graph {
        let mut g = Graph::empty(self.n).expect("order validated");
        let mut idx = 0;
        for v in 1..self.n {
            for u in 0..v {
                if edge_mask & (1 << idx) != 0 {
                    g.add_edge(u, v).expect("in range");
                }
                idx += 1;
            }
        }
        g
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let g = self.graph_of(self.next_mask);
            self.next_mask += 1;
            if !g.is_connected() {
                continue;
            }
            let code = self
                .canon
                .canonical_form(&g)
                .expect("n <= 7 within canon cap")
                .code();
            if self.seen.insert(code) {
                return Some(g);
            }
        }
        None
    }
}

/// One representative per isomorphism class of trees on `n` vertices,
/// found by sweeping all (n-1)-edge subsets. Practical for `n <= 8`.
pub(crate) fn enumerate_trees(n: usize) -> Result<Vec<Graph>, CanonError> {
    if n > MAX_CANON_N {
        return Err(CanonError::TooLarge { n });
    }
    if n == 1 {
        return Ok(alloc::vec![Graph::empty(1).expect("valid order")]);
    }
    let pair_count = n * (n - 1) / 2;
    let mut canon = Canonicalizer::new();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    // Gosper's hack over all (n-1)-subsets of the vertex pairs.
    let mut mask: u64 = (1u64 << (n - 1)) - 1;
    let end: u64 = 1u64 << pair_count;
    while mask < end {
        let g = tree_candidate(n, mask);
        if g.is_tree() {
            let code = canon.canonical_form(&g).expect("within cap").code();
            if seen.insert(code) {
                out.push(g);
            }
        }
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    Ok(out)
}

fn tree_candidate(n: usize, edge_mask: u64) -> Graph {
    let mut g = Graph::empty(n).expect("order validated");
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if edge_mask & (1 << idx) != 0 {
                g.add_edge(u, v).expect("in range");
            }
            idx += 1;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_cycle, build_path};
    use crate::graph::Graph;

    #[test]
    fn relabeling_invariance() {
        let p4a = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        // same path drawn 2-0-3-1
        let p4b = Graph::from_edge_list(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_form(&p4a).unwrap(), canonical_form(&p4b).unwrap());
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let c4 = build_cycle(4).unwrap();
        let p4 = build_path(4).unwrap();
        assert_ne!(canonical_form(&c4).unwrap(), canonical_form(&p4).unwrap());
    }

    #[test]
    fn cap_enforced() {
        let g = Graph::empty(10).unwrap();
        assert_eq!(canonical_form(&g), Err(CanonError::TooLarge { n: 10 }));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_connected(2).unwrap().count(), 1);
        assert_eq!(enumerate_connected(3).unwrap().count(), 2);
        assert_eq!(enumerate_connected(4).unwrap().count(), 6);
        assert_eq!(enumerate_connected(5).unwrap().count(), 21);
        assert!(enumerate_connected(8).is_err());
        assert!(enumerate_connected(1).is_err());
    }

    #[test]
    fn enumeration_yields_distinct_classes() {
        let reps: Vec<Graph> = enumerate_connected(5).unwrap().collect();
        let mut codes: Vec<u64> = reps
            .iter()
            .map(|g| canonical_form(g).unwrap().code())
            .collect();
        codes.sort_unstable();
        codes.dedup();
        assert_eq!(codes.len(), reps.len());
    }

    #[test]
    fn distinct_codes_over_labeled_connected_n5() {
        // every labeled connected graph on 5 vertices, deduped by code
        let mut codes = BTreeSet::new();
        let mut canon = Canonicalizer::new();
        for mask in 0u32..(1 << 10) {
            let mut g = Graph::empty(5).unwrap();
            let mut idx = 0;
            for v in 1..5 {
                for u in 0..v {
                    if mask & (1 << idx) != 0 {
                        g.add_edge(u, v).unwrap();
                    }
                    idx += 1;
                }
            }
            if g.is_connected() {
                codes.insert(canon.canonical_form(&g).unwrap().code());
            }
        }
        assert_eq!(codes.len(), 21);
    }

    #[test]
    fn tree_counts() {
        assert_eq!(enumerate_trees(4).unwrap().len(), 2);
        assert_eq!(enumerate_trees(5).unwrap().len(), 3);
        assert_eq!(enumerate_trees(6).unwrap().len(), 6);
        assert_eq!(enumerate_trees(7).unwrap().len(), 11);
    }
}

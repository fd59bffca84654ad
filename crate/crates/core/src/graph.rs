//! Bitmask graph representation for up to 32 vertices.
//!
//! Every vertex stores its neighbourhood as one `u32`, so degree is a
//! popcount and most set operations are single machine-word instructions.
//! All other modules in this crate work on this representation.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Largest vertex count representable by the `u32` adjacency masks.
pub const MAX_VERTICES: usize = 32;

#[inline(always)]
const fn bit(v: usize) -> u32 {
    1u32 << v
}

/// A set of vertices, stored as an n-bit mask.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full vertex set of a graph on `n` vertices.
    #[inline]
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(bit(v))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.0 & bit(v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Iterates the members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        core::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Errors from graph construction and editing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// Vertex count outside the supported `1..=32` range.
    BadOrder { n: usize },
    /// An edge endpoint is not a vertex of the graph.
    VertexOutOfRange { v: usize, n: usize },
    /// An edge of the form (v, v).
    SelfLoop { v: usize },
    /// Tried to delete an edge that is not present.
    NotAnEdge { u: usize, v: usize },
    /// An operation would grow the graph past 32 vertices.
    TooManyVertices { n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::BadOrder { n } => {
                write!(f, "vertex count {n} outside supported range 1..=32")
            }
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for a graph on {n} vertices")
            }
            GraphError::SelfLoop { v } => write!(f, "self-loop at vertex {v}"),
            GraphError::NotAnEdge { u, v } => write!(f, "no edge between {u} and {v}"),
            GraphError::TooManyVertices { n } => {
                write!(f, "{n} vertices exceed the supported maximum of 32")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// An undirected simple graph on at most 32 vertices.
///
/// `adj[i]` holds the neighbourhood of vertex `i` as a bitmask. The
/// adjacency is kept symmetric and loop-free by construction; bits at
/// positions `>= n` are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadOrder { n });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse to one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph directly from adjacency masks.
    ///
    /// Callers must supply a symmetric, loop-free adjacency; this is
    /// checked in debug builds only.
    pub(crate) fn from_adj(adj: Vec<u32>) -> Graph {
        let n = adj.len();
        debug_assert!(n >= 1 && n <= MAX_VERTICES);
        #[cfg(debug_assertions)]
        {
            let full = VertexSet::full(n).0;
            for (i, &m) in adj.iter().enumerate() {
                debug_assert_eq!(m & !full, 0, "bits beyond n at vertex {i}");
                debug_assert_eq!(m & bit(i), 0, "self-loop at vertex {i}");
            }
            for i in 0..n {
                for j in 0..n {
                    debug_assert_eq!(adj[i] & bit(j) != 0, adj[j] & bit(i) != 0);
                }
            }
        }
        Graph { n, adj }
    }

    #[inline]
    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// All vertices of the graph as a mask.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as (u, v) pairs with u < v, in column-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 1..self.n {
            for u in 0..v {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Adds the edge uv in place. Idempotent.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop { v });
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    /// The induced subgraph on `V \ s`, with the surviving vertices
    /// renumbered consecutively in their original order.
    pub fn delete_vertices(&self, s: VertexSet) -> Graph {
        let drop = s.0 & self.vertices().0;
        let keep = self.vertices().0 & !drop;
        let kept: Vec<usize> = VertexSet(keep).iter().collect();
        let mut adj = vec![0u32; kept.len()];
        for (new_i, &old_i) in kept.iter().enumerate() {
            let mut m = self.adj[old_i] & keep;
            while m != 0 {
                let old_j = m.trailing_zeros() as usize;
                m &= m - 1;
                let new_j = (keep & (bit(old_j) - 1)).count_ones() as usize;
                adj[new_i] |= bit(new_j);
            }
        }
        Graph {
            n: kept.len(),
            adj,
        }
    }

    /// The graph with one vertex removed.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.delete_vertices(VertexSet::singleton(v))
    }

    /// Removes edge uv, keeping all vertices.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge { u, v });
        }
        let mut g = self.clone();
        g.adj[u] &= !bit(v);
        g.adj[v] &= !bit(u);
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&m| m << self.n));
        Ok(Graph { n, adj })
    }

    /// Whether every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        let full = self.vertices().0;
        let mut reached = 1u32;
        loop {
            let mut grown = reached;
            let mut m = reached;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                grown |= self.adj[v];
            }
            if grown == reached {
                return reached == full;
            }
            reached = grown;
        }
    }

    /// Connected with exactly n-1 edges.
    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() == self.n - 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_complete, build_cycle, build_path};

    #[test]
    fn from_edge_list_basics() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert!(k2.has_edge(0, 1) && k2.has_edge(1, 0));

        let p5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(p5, build_path(5).unwrap());

        // duplicate edges collapse
        let g = Graph::from_edge_list(3, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree(2), 0);
    }

    #[test]
    fn from_edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(0, &[]),
            Err(GraphError::BadOrder { n: 0 })
        );
        assert_eq!(
            Graph::from_edge_list(33, &[]),
            Err(GraphError::BadOrder { n: 33 })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { v: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(GraphError::SelfLoop { v: 1 })
        );
    }

    #[test]
    fn connectivity_and_trees() {
        assert!(build_path(5).unwrap().is_connected());
        assert!(build_path(5).unwrap().is_tree());
        let c4 = build_cycle(4).unwrap();
        assert!(c4.is_connected());
        assert!(!c4.is_tree());

        let p3 = build_path(3).unwrap();
        let two_p3 = p3.disjoint_union(&p3).unwrap();
        assert!(!two_p3.is_connected());
    }

    #[test]
    fn vertex_deletion() {
        let c4 = build_cycle(4).unwrap();
        assert_eq!(c4.delete_vertex(0), build_path(3).unwrap());

        let k5 = build_complete(5).unwrap();
        assert_eq!(k5.delete_vertices(VertexSet(0b00011)), build_complete(3).unwrap());

        assert_eq!(c4.delete_vertices(VertexSet::EMPTY), c4);
    }

    #[test]
    fn edge_deletion() {
        let c4 = build_cycle(4).unwrap();
        let g = c4.delete_edge(0, 1).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_tree()); // C4 minus an edge is P4

        assert_eq!(
            c4.delete_edge(0, 2),
            Err(GraphError::NotAnEdge { u: 0, v: 2 })
        );
    }

    #[test]
    fn vertex_set_iteration() {
        let s = VertexSet(0b10110);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 2, 4]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(4) && !s.contains(0));
    }
}

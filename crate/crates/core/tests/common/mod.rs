//! Shared helpers for the integration tests: seeded random graphs and a
//! deliberately naive path search that serves as the independent oracle.

use pathcover_core::{Graph, VertexSet};
use rand::Rng;

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("valid random graph")
}

/// Order of a longest simple path inside the `allowed` vertices, found by
/// exhaustive depth-first search over every simple path.
pub fn dfs_longest_path(g: &Graph, allowed: VertexSet) -> usize {
    fn grow(g: &Graph, v: usize, visited: u32, allowed: u32, depth: usize, best: &mut usize) {
        if depth > *best {
            *best = depth;
        }
        let mut next = g.neighbours(v).0 & allowed & !visited;
        while next != 0 {
            let u = next.trailing_zeros() as usize;
            next &= next - 1;
            grow(g, u, visited | (1 << u), allowed, depth + 1, best);
        }
    }
    let mut best = 0;
    for start in allowed.iter() {
        grow(g, start, 1 << start, allowed.0, 1, &mut best);
    }
    best
}

/// Calls `visit` once per simple path on exactly `k` vertices (each path
/// seen from both ends; fine for universally quantified checks).
#[allow(dead_code)]
pub fn for_each_k_path(g: &Graph, k: usize, visit: &mut impl FnMut(&[usize])) {
    fn grow(
        g: &Graph,
        path: &mut Vec<usize>,
        visited: u32,
        k: usize,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if path.len() == k {
            visit(path);
            return;
        }
        let v = *path.last().expect("path nonempty");
        let mut next = g.neighbours(v).0 & !visited;
        while next != 0 {
            let u = next.trailing_zeros() as usize;
            next &= next - 1;
            path.push(u);
            grow(g, path, visited | (1 << u), k, visit);
            path.pop();
        }
    }
    if k == 0 {
        return;
    }
    let mut path = Vec::with_capacity(k);
    for start in 0..g.order() {
        path.push(start);
        grow(g, &mut path, 1 << start, k, visit);
        path.pop();
    }
}

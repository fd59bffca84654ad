//! Builders for the graph constructions used throughout the library:
//! pendant attachments, non-isomorphic twins with equal path sequences,
//! the two-target construction hitting prescribed values of psi_k and
//! psi_m, disjoint path unions, and path-per-vertex supergraphs whose
//! anchor set is a minimum cover.
//!
//! Every builder re-checks its advertised path numbers with the exact
//! solver whenever the output fits under the solver cap; a failed check is
//! reported as an error, never swallowed. Oversized outputs are still
//! built but flagged [`CheckStatus::Unchecked`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::{self, Canonicalizer};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::sequence::PathSequence;
use crate::solver::{self, MAX_SOLVER_N};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionError {
    BadParameter { detail: String },
    TooManyVertices { n: usize },
    /// A solver check of a built graph did not match its target.
    PostconditionFailed { detail: String },
    /// An exhaustive search that is expected to succeed found nothing.
    SearchFailed { detail: String },
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::BadParameter { detail } => write!(f, "bad parameter: {detail}"),
            ConstructionError::TooManyVertices { n } => {
                write!(f, "construction needs {n} vertices, more than the supported 32")
            }
            ConstructionError::PostconditionFailed { detail } => {
                write!(f, "postcondition failed: {detail}")
            }
            ConstructionError::SearchFailed { detail } => write!(f, "search failed: {detail}"),
        }
    }
}

impl core::error::Error for ConstructionError {}

/// Whether a builder's solver postconditions actually ran.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Verified,
    /// Output too large for the solver; built but not checked.
    Unchecked,
}

impl CheckStatus {
    fn and(self, other: CheckStatus) -> CheckStatus {
        match (self, other) {
            (CheckStatus::Verified, CheckStatus::Verified) => CheckStatus::Verified,
            _ => CheckStatus::Unchecked,
        }
    }
}

/// A built graph together with named vertex sets and the check outcome.
#[derive(Clone, Debug)]
pub struct LabeledConstruction {
    pub graph: Graph,
    pub annotations: BTreeMap<String, VertexSet>,
    pub status: CheckStatus,
}

/// Two graphs built to share a path sequence without being isomorphic.
#[derive(Clone, Debug)]
pub struct TwinPair {
    pub left: Graph,
    pub right: Graph,
    pub status: CheckStatus,
}

/// Parameters for the two-target construction: prescribe psi_k = p_k and
/// psi_m = p_m for m < k. `derived_a` is floor(k/m).
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub m: usize,
    pub k: usize,
    pub p_k: usize,
    pub p_m: usize,
}

impl ConstructionSpec {
    pub fn new(m: usize, k: usize, p_k: usize, p_m: usize) -> Result<Self, ConstructionError> {
        if m < 1 || m >= k {
            return Err(ConstructionError::BadParameter {
                detail: format!("need 1 <= m < k, got m={m} k={k}"),
            });
        }
        if p_k == 0 {
            return Err(ConstructionError::BadParameter {
                detail: String::from("p_k must be positive"),
            });
        }
        let spec = ConstructionSpec { m, k, p_k, p_m };
        if p_m + 1 < p_k + spec.derived_a() {
            return Err(ConstructionError::BadParameter {
                detail: format!(
                    "p_m = {p_m} below the required p_k + floor(k/m) - 1 = {}",
                    p_k + spec.derived_a() - 1
                ),
            });
        }
        Ok(spec)
    }

    pub fn derived_a(&self) -> usize {
        self.k / self.m
    }
}

fn check_psi(
    g: &Graph,
    k: usize,
    expected: usize,
    what: &str,
) -> Result<CheckStatus, ConstructionError> {
    if g.order() > MAX_SOLVER_N {
        return Ok(CheckStatus::Unchecked);
    }
    let got = solver::psi_k(g, k).expect("k within range, order under cap");
    if got == expected {
        Ok(CheckStatus::Verified)
    } else {
        Err(ConstructionError::PostconditionFailed {
            detail: format!("{what}: expected psi_{k} = {expected}, solver found {got}"),
        })
    }
}

/// `g` with `t` new degree-1 vertices all attached to `v`.
pub fn attach_pendants(g: &Graph, v: usize, t: usize) -> Result<Graph, ConstructionError> {
    let n = g.order();
    if v >= n {
        return Err(ConstructionError::BadParameter {
            detail: format!("pendant anchor {v} out of range for order {n}"),
        });
    }
    if n + t > MAX_VERTICES {
        return Err(ConstructionError::TooManyVertices { n: n + t });
    }
    let mut out = Graph::empty(n + t).expect("order checked");
    for (a, b) in g.edges() {
        out.add_edge(a, b).expect("in range");
    }
    for i in 0..t {
        out.add_edge(v, n + i).expect("in range");
    }
    Ok(out)
}

/// A non-isomorphic pair on `n >= 4` vertices with equal path sequences:
/// a 4-cycle and a diagonal-added 4-cycle, each padded with pendants at a
/// fixed vertex. The edge counts differ, so the pair can never be
/// isomorphic; the shared sequence is solver-checked.
pub fn twin_pair(n: usize) -> Result<TwinPair, ConstructionError> {
    if n < 4 {
        return Err(ConstructionError::BadParameter {
            detail: format!("twin pair needs n >= 4, got {n}"),
        });
    }
    let c4 = crate::families::build_cycle(4).expect("4 >= 3");
    // K4 minus the edge 0-1; vertices 2 and 3 keep degree 3
    let k4_minus_e = Graph::from_edge_list(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        .expect("valid edge list");
    let left = attach_pendants(&c4, 0, n - 4)?;
    let right = attach_pendants(&k4_minus_e, 2, n - 4)?;
    debug_assert_ne!(left.edge_count(), right.edge_count());

    let status = if n <= MAX_SOLVER_N {
        let sl = solver::path_sequence(&left).expect("under cap");
        let sr = solver::path_sequence(&right).expect("under cap");
        if sl != sr {
            return Err(ConstructionError::PostconditionFailed {
                detail: format!("twin pair sequences differ: {sl} vs {sr}"),
            });
        }
        CheckStatus::Verified
    } else {
        CheckStatus::Unchecked
    };
    Ok(TwinPair {
        left,
        right,
        status,
    })
}

/// Core of the two-target construction: p_k + a - 1 disjoint paths on
/// 2m-1 vertices, with every vertex joined to the middle vertex of every
/// other path. Satisfies psi_m = p_k + a - 1 and psi_k = p_k.
///
/// Path i occupies the contiguous block [i(2m-1), (i+1)(2m-1)); its middle
/// sits at offset m-1. The middle set is annotated as "middles".
pub fn thm34_core(spec: &ConstructionSpec) -> Result<LabeledConstruction, ConstructionError> {
    let m = spec.m;
    let a = spec.derived_a();
    let copies = spec.p_k + a - 1;
    let block = 2 * m - 1;
    let n = copies * block;
    if n > MAX_VERTICES {
        return Err(ConstructionError::TooManyVertices { n });
    }
    let mut g = Graph::empty(n).expect("order checked");
    let mut middles = VertexSet::EMPTY;
    for i in 0..copies {
        let base = i * block;
        for x in 1..block {
            g.add_edge(base + x - 1, base + x).expect("in range");
        }
        middles.insert(base + m - 1);
    }
    for i in 0..copies {
        for j in 0..copies {
            if i == j {
                continue;
            }
            let middle_j = j * block + m - 1;
            for x in 0..block {
                g.add_edge(i * block + x, middle_j).expect("in range");
            }
        }
    }

    let status = check_psi(&g, m, copies, "two-target core")?
        .and(check_psi(&g, spec.k, spec.p_k, "two-target core")?);
    let mut annotations = BTreeMap::new();
    annotations.insert(String::from("middles"), middles);
    Ok(LabeledConstruction {
        graph: g,
        annotations,
        status,
    })
}

/// Full two-target construction: the core plus p_m - (p_k + a - 1) extra
/// paths on m vertices, each hung from the first path's middle vertex.
/// Satisfies psi_k = p_k and psi_m = p_m, and is connected.
pub fn thm34_full(spec: &ConstructionSpec) -> Result<LabeledConstruction, ConstructionError> {
    let core = thm34_core(spec)?;
    let m = spec.m;
    let a = spec.derived_a();
    let extra = spec.p_m - (spec.p_k + a - 1);
    let core_n = core.graph.order();
    let n = core_n + extra * m;
    if n > MAX_VERTICES {
        return Err(ConstructionError::TooManyVertices { n });
    }
    let mut g = Graph::empty(n).expect("order checked");
    for (u, v) in core.graph.edges() {
        g.add_edge(u, v).expect("in range");
    }
    let first_middle = m - 1;
    for j in 0..extra {
        let base = core_n + j * m;
        for x in 1..m {
            g.add_edge(base + x - 1, base + x).expect("in range");
        }
        g.add_edge(base, first_middle).expect("in range");
    }
    debug_assert!(g.is_connected());

    let status = check_psi(&g, spec.k, spec.p_k, "two-target graph")?
        .and(check_psi(&g, m, spec.p_m, "two-target graph")?);
    let mut annotations = core.annotations;
    if extra > 0 {
        annotations.insert(String::from("attachment"), VertexSet::singleton(first_middle));
    }
    Ok(LabeledConstruction {
        graph: g,
        annotations,
        status,
    })
}

/// `s` disjoint copies of the path on `m` vertices; psi_m = s and
/// psi_k = 0 for every k > m.
pub fn disjoint_paths(s: usize, m: usize) -> Result<Graph, ConstructionError> {
    if s < 1 || m < 1 {
        return Err(ConstructionError::BadParameter {
            detail: format!("need s >= 1 and m >= 1, got s={s} m={m}"),
        });
    }
    let n = s * m;
    if n > MAX_VERTICES {
        return Err(ConstructionError::TooManyVertices { n });
    }
    let mut g = Graph::empty(n).expect("order checked");
    for i in 0..s {
        for x in 1..m {
            g.add_edge(i * m + x - 1, i * m + x).expect("in range");
        }
    }
    if n <= MAX_SOLVER_N {
        let seq = solver::path_sequence(&g).expect("under cap");
        if seq.psi(m) != s {
            return Err(ConstructionError::PostconditionFailed {
                detail: format!("disjoint paths: psi_{m} = {} instead of {s}", seq.psi(m)),
            });
        }
        for k in m + 1..=n {
            if seq.psi(k) != 0 {
                return Err(ConstructionError::PostconditionFailed {
                    detail: format!("disjoint paths: psi_{k} = {} instead of 0", seq.psi(k)),
                });
            }
        }
    }
    Ok(g)
}

/// Replaces each vertex of `h` by a fresh path on `k` vertices (keeping
/// the original edges), so the original vertex set becomes a minimum
/// cover against k-vertex paths of size |h|.
///
/// Vertex v of `h` maps to v*k; the originals are annotated as "anchors".
pub fn anchor_supergraph(h: &Graph, k: usize) -> Result<LabeledConstruction, ConstructionError> {
    if k < 1 {
        return Err(ConstructionError::BadParameter {
            detail: String::from("k must be positive"),
        });
    }
    let base = h.order();
    let n = base * k;
    if n > MAX_VERTICES {
        return Err(ConstructionError::TooManyVertices { n });
    }
    let mut g = Graph::empty(n).expect("order checked");
    let mut anchors = VertexSet::EMPTY;
    for v in 0..base {
        anchors.insert(v * k);
        for x in 1..k {
            g.add_edge(v * k + x - 1, v * k + x).expect("in range");
        }
    }
    for (u, v) in h.edges() {
        g.add_edge(u * k, v * k).expect("in range");
    }

    // the induced subgraph on the anchors is h itself (order-preserving)
    let inner = g.delete_vertices(VertexSet(g.vertices().0 & !anchors.0));
    if &inner != h {
        return Err(ConstructionError::PostconditionFailed {
            detail: String::from("anchor supergraph does not induce the base graph"),
        });
    }

    let status = if n <= MAX_SOLVER_N {
        let table = solver::longest_path_table(&g).expect("under cap");
        let psi = solver::sequence_from_table(&table).psi(k);
        let residual = table.longest_within(VertexSet(g.vertices().0 & !anchors.0));
        if psi != base || residual >= k {
            return Err(ConstructionError::PostconditionFailed {
                detail: format!(
                    "anchor supergraph: psi_{k} = {psi} (want {base}), residual longest path {residual}"
                ),
            });
        }
        CheckStatus::Verified
    } else {
        CheckStatus::Unchecked
    };

    let mut annotations = BTreeMap::new();
    annotations.insert(String::from("anchors"), anchors);
    Ok(LabeledConstruction {
        graph: g,
        annotations,
        status,
    })
}

/// Two non-isomorphic trees on `n >= 7` vertices with the same path
/// sequence (n,2,2,1,1,0,...,0).
///
/// The base pair on 7 vertices is recovered by exhaustive search over all
/// trees on 7 vertices, keeping the two canonically smallest with the
/// target sequence; larger sizes attach pendants at a searched pair of
/// vertices. Non-isomorphism is certified by rooted tree codes, so it is
/// checked at every size even past the solver cap.
pub fn twin_trees(n: usize) -> Result<TwinPair, ConstructionError> {
    if n < 7 {
        return Err(ConstructionError::BadParameter {
            detail: format!("twin trees need n >= 7, got {n}"),
        });
    }
    if n > MAX_VERTICES {
        return Err(ConstructionError::TooManyVertices { n });
    }
    let target7 = PathSequence::new(Vec::from([7u8, 2, 2, 1, 1, 0, 0]));

    let mut canon = Canonicalizer::new();
    let mut bases: Vec<(u64, Graph)> = Vec::new();
    for tree in canon::enumerate_trees(7).expect("7 within canon cap") {
        let seq = solver::path_sequence(&tree).expect("7 under solver cap");
        if seq == target7 {
            let code = canon.canonical_form(&tree).expect("within cap").code();
            bases.push((code, tree));
        }
    }
    bases.sort_by_key(|(code, _)| *code);
    if bases.len() < 2 {
        return Err(ConstructionError::SearchFailed {
            detail: format!(
                "expected at least two trees on 7 vertices with sequence {target7}, found {}",
                bases.len()
            ),
        });
    }
    let t1 = bases[0].1.clone();
    let t2 = bases[1].1.clone();
    if n == 7 {
        return Ok(TwinPair {
            left: t1,
            right: t2,
            status: CheckStatus::Verified,
        });
    }

    // search the attachment vertices at a solvable size, reuse them beyond
    let search_n = n.min(MAX_SOLVER_N);
    let mut target = Vec::from([search_n as u8, 2, 2, 1, 1]);
    target.resize(search_n, 0);
    let target = PathSequence::new(target);
    for w1 in 0..7 {
        let s1 = attach_pendants(&t1, w1, search_n - 7)?;
        if solver::path_sequence(&s1).expect("under cap") != target {
            continue;
        }
        for w2 in 0..7 {
            let s2 = attach_pendants(&t2, w2, search_n - 7)?;
            if solver::path_sequence(&s2).expect("under cap") != target {
                continue;
            }
            if tree_code(&s1) == tree_code(&s2) {
                continue;
            }
            return if n == search_n {
                Ok(TwinPair {
                    left: s1,
                    right: s2,
                    status: CheckStatus::Verified,
                })
            } else {
                let left = attach_pendants(&t1, w1, n - 7)?;
                let right = attach_pendants(&t2, w2, n - 7)?;
                if tree_code(&left) == tree_code(&right) {
                    return Err(ConstructionError::PostconditionFailed {
                        detail: String::from("padded twin trees became isomorphic"),
                    });
                }
                Ok(TwinPair {
                    left,
                    right,
                    status: CheckStatus::Unchecked,
                })
            };
        }
    }
    Err(ConstructionError::SearchFailed {
        detail: format!("no pendant attachment keeps the twin tree sequence at n = {n}"),
    })
}

/// Canonical code for a tree: root at the centre (both centres for even
/// diameter ties) and take the smaller of the recursive bracket encodings.
/// Equal codes iff isomorphic trees; panics if `g` is not a tree.
fn tree_code(g: &Graph) -> String {
    assert!(g.is_tree(), "tree_code needs a tree");
    let n = g.order();
    if n == 1 {
        return String::from("()");
    }
    // peel leaves layer by layer until only the centre(s) remain
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = g.vertices().0;
    let mut remaining = n;
    while remaining > 2 {
        let leaves: Vec<usize> = VertexSet(alive)
            .iter()
            .filter(|&v| degree[v] == 1)
            .collect();
        for v in leaves {
            alive &= !(1u32 << v);
            remaining -= 1;
            for u in g.neighbours(v).iter() {
                if alive & (1u32 << u) != 0 {
                    degree[u] -= 1;
                }
            }
        }
    }
    VertexSet(alive)
        .iter()
        .map(|root| encode_rooted(g, root, usize::MAX))
        .min()
        .expect("at least one centre")
}

fn encode_rooted(g: &Graph, v: usize, parent: usize) -> String {
    let mut parts: Vec<String> = g
        .neighbours(v)
        .iter()
        .filter(|&u| u != parent)
        .map(|u| encode_rooted(g, u, v))
        .collect();
    parts.sort();
    let mut out = String::from("(");
    for p in parts {
        out.push_str(&p);
    }
    out.push(')');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::families::{build_complete, build_cycle, build_path};
    use crate::solver::{minimum_k_pvcs, path_sequence};

    #[test]
    fn pendants_basic() {
        let c4 = build_cycle(4).unwrap();
        let g = attach_pendants(&c4, 1, 1).unwrap();
        assert_eq!(path_sequence(&g).unwrap().values(), &[5, 2, 2, 1, 1]);
        assert_eq!(attach_pendants(&c4, 0, 0).unwrap(), c4);
        assert!(attach_pendants(&c4, 4, 1).is_err());
        assert!(attach_pendants(&c4, 0, 29).is_err());
    }

    #[test]
    fn twin_pair_small() {
        let pair = twin_pair(4).unwrap();
        assert_eq!(pair.status, CheckStatus::Verified);
        assert_eq!(path_sequence(&pair.left).unwrap().values(), &[4, 2, 2, 1]);
        assert_eq!(path_sequence(&pair.right).unwrap().values(), &[4, 2, 2, 1]);
        assert_ne!(
            canonical_form(&pair.left).unwrap(),
            canonical_form(&pair.right).unwrap()
        );

        let pair6 = twin_pair(6).unwrap();
        assert_eq!(
            path_sequence(&pair6.left).unwrap().values(),
            &[6, 2, 2, 1, 1, 0]
        );
        assert_eq!(
            path_sequence(&pair6.right).unwrap().values(),
            &[6, 2, 2, 1, 1, 0]
        );
    }

    #[test]
    fn two_target_core_example() {
        // m=3, k=6, p_k=2: three cross-linked paths on 5 vertices
        let spec = ConstructionSpec::new(3, 6, 2, 3).unwrap();
        assert_eq!(spec.derived_a(), 2);
        let built = thm34_core(&spec).unwrap();
        assert_eq!(built.graph.order(), 15);
        assert_eq!(built.status, CheckStatus::Verified);
        assert_eq!(built.annotations["middles"].len(), 3);
        let seq = path_sequence(&built.graph).unwrap();
        assert_eq!(seq.psi(3), 3);
        assert_eq!(seq.psi(6), 2);
    }

    #[test]
    fn two_target_degenerate_m1() {
        // m=1, k=2, p_k=1: two one-vertex paths joined middle to middle
        let spec = ConstructionSpec::new(1, 2, 1, 2).unwrap();
        let built = thm34_core(&spec).unwrap();
        assert_eq!(built.graph, build_complete(2).unwrap());
    }

    #[test]
    fn two_target_full_examples() {
        let spec = ConstructionSpec::new(2, 4, 1, 3).unwrap();
        let built = thm34_full(&spec).unwrap();
        assert_eq!(built.status, CheckStatus::Verified);
        let seq = path_sequence(&built.graph).unwrap();
        assert_eq!(seq.psi(2), 3);
        assert_eq!(seq.psi(4), 1);
        assert!(built.graph.is_connected());

        // no extra paths: full equals core
        let tight = ConstructionSpec::new(3, 6, 2, 3).unwrap();
        assert_eq!(
            thm34_full(&tight).unwrap().graph,
            thm34_core(&tight).unwrap().graph
        );

        let spec = ConstructionSpec::new(3, 7, 2, 4).unwrap();
        let built = thm34_full(&spec).unwrap();
        let seq = path_sequence(&built.graph).unwrap();
        assert_eq!(seq.psi(3), 4);
        assert_eq!(seq.psi(7), 2);
    }

    #[test]
    fn spec_validation() {
        assert!(ConstructionSpec::new(3, 3, 1, 1).is_err());
        assert!(ConstructionSpec::new(2, 4, 0, 3).is_err());
        // p_m below p_k + a - 1
        assert!(ConstructionSpec::new(2, 4, 2, 2).is_err());
    }

    #[test]
    fn disjoint_path_unions() {
        let g = disjoint_paths(3, 2).unwrap();
        let seq = path_sequence(&g).unwrap();
        assert_eq!(seq.psi(2), 3);
        assert_eq!(seq.psi(3), 0);
        assert!(!g.is_connected());

        assert_eq!(disjoint_paths(1, 4).unwrap(), build_path(4).unwrap());
        assert!(disjoint_paths(0, 2).is_err());
        assert!(disjoint_paths(11, 3).is_err());
    }

    #[test]
    fn anchor_supergraph_examples() {
        let k3 = build_complete(3).unwrap();
        let built = anchor_supergraph(&k3, 3).unwrap();
        assert_eq!(built.graph.order(), 9);
        assert_eq!(built.status, CheckStatus::Verified);
        let anchors = built.annotations["anchors"];
        assert_eq!(anchors.len(), 3);
        assert!(minimum_k_pvcs(&built.graph, 3).unwrap().contains(&anchors));

        // k = 1 reproduces the base graph
        let same = anchor_supergraph(&k3, 1).unwrap();
        assert_eq!(same.graph, k3);

        let p2 = build_path(2).unwrap();
        let built = anchor_supergraph(&p2, 2).unwrap();
        assert_eq!(solver::psi_k(&built.graph, 2).unwrap(), 2);
    }

    #[test]
    fn twin_trees_base_and_padded() {
        let pair = twin_trees(7).unwrap();
        assert!(pair.left.is_tree() && pair.right.is_tree());
        assert_eq!(
            path_sequence(&pair.left).unwrap().values(),
            &[7, 2, 2, 1, 1, 0, 0]
        );
        assert_eq!(
            path_sequence(&pair.right).unwrap().values(),
            &[7, 2, 2, 1, 1, 0, 0]
        );
        assert_ne!(
            canonical_form(&pair.left).unwrap(),
            canonical_form(&pair.right).unwrap()
        );

        let pair9 = twin_trees(9).unwrap();
        assert_eq!(pair9.status, CheckStatus::Verified);
        assert!(pair9.left.is_tree() && pair9.right.is_tree());
        assert_eq!(
            path_sequence(&pair9.left).unwrap().values(),
            &[9, 2, 2, 1, 1, 0, 0, 0, 0]
        );
        assert_eq!(
            path_sequence(&pair9.right).unwrap().values(),
            &[9, 2, 2, 1, 1, 0, 0, 0, 0]
        );
        assert_ne!(tree_code(&pair9.left), tree_code(&pair9.right));
    }

    #[test]
    fn tree_codes_separate_small_trees() {
        let star = crate::families::build_complete_bipartite(1, 3).unwrap();
        let p4 = build_path(4).unwrap();
        assert_ne!(tree_code(&star), tree_code(&p4));
        // same tree, different labeling
        let p4b = Graph::from_edge_list(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(tree_code(&p4), tree_code(&p4b));
    }
}

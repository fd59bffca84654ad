//! Graph sources for census runs: the built-in enumerator for small
//! orders, graph6 files for the rest, and the plain edge-list format.

use std::fs;
use std::path::{Path, PathBuf};

use pathcover_core::canon::{CanonError, Canonicalizer, MAX_CANON_N};
use pathcover_core::graph::GraphError;
use pathcover_core::graph6::Graph6Error;
use pathcover_core::{decode_graph6, enumerate_connected, Graph};
use thiserror::Error;

/// Class counts of connected graphs per order, used to cross-check
/// ingested files; mismatches are surfaced as warnings, not errors.
pub const EXPECTED_CONNECTED_CLASSES: [usize; 10] =
    [0, 1, 1, 2, 6, 21, 112, 853, 11_117, 261_080];

#[derive(Error, Debug)]
pub enum SourceError {
    #[error("cannot read {path}: {err}")]
    Io { path: PathBuf, err: std::io::Error },
    #[error("{path}:{line}: {err}")]
    BadGraph6 {
        path: PathBuf,
        line: usize,
        err: Graph6Error,
    },
    #[error("{path}:{line}: graph on {got} vertices in a file of {expected}-vertex graphs")]
    MixedOrders {
        path: PathBuf,
        line: usize,
        expected: usize,
        got: usize,
    },
    #[error("{path}:{line}: duplicate isomorphism class (same class as line {first})")]
    DuplicateClass {
        path: PathBuf,
        line: usize,
        first: usize,
    },
    #[error(
        "cannot verify isomorphism classes for n = {n} (> {MAX_CANON_N}); pass --trusted to skip the check"
    )]
    DedupeUnavailable { n: usize },
    #[error("{0}")]
    Enumeration(#[from] CanonError),
    #[error("no graphs in input")]
    Empty,
    #[error("bad edge list at line {line}: {detail}")]
    BadEdgeList { line: usize, detail: String },
    #[error("{0}")]
    Graph(#[from] GraphError),
}

/// Graphs ready for a sweep, plus any advisory warnings from loading.
pub struct LoadedGraphs {
    pub n: usize,
    pub graphs: Vec<Graph>,
    pub warnings: Vec<String>,
}

/// Where census graphs come from.
#[derive(Clone, Debug)]
pub enum GraphSource {
    /// Built-in exhaustive enumeration, 2 <= n <= 7.
    Builtin { n: usize },
    /// A graph6 file, one graph per line. `trusted` skips the
    /// pairwise-non-isomorphism check.
    File { path: PathBuf, trusted: bool },
}

pub fn load_graphs(source: &GraphSource) -> Result<LoadedGraphs, SourceError> {
    match source {
        GraphSource::Builtin { n } => {
            let graphs: Vec<Graph> = enumerate_connected(*n)?.collect();
            Ok(LoadedGraphs {
                n: *n,
                graphs,
                warnings: Vec::new(),
            })
        }
        GraphSource::File { path, trusted } => load_graph6_file(path, *trusted),
    }
}

/// Reads a graph6 file (LF-terminated lines). All graphs must share one
/// order. Unless `trusted`, the lines are canonicalized and any repeated
/// isomorphism class is an error; that check needs n within the
/// canonicalization cap.
pub fn load_graph6_file(path: &Path, trusted: bool) -> Result<LoadedGraphs, SourceError> {
    let text = fs::read_to_string(path).map_err(|err| SourceError::Io {
        path: path.to_path_buf(),
        err,
    })?;
    let mut graphs = Vec::new();
    let mut n = 0usize;
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        let g = decode_graph6(line).map_err(|err| SourceError::BadGraph6 {
            path: path.to_path_buf(),
            line: idx + 1,
            err,
        })?;
        if graphs.is_empty() {
            n = g.order();
        } else if g.order() != n {
            return Err(SourceError::MixedOrders {
                path: path.to_path_buf(),
                line: idx + 1,
                expected: n,
                got: g.order(),
            });
        }
        graphs.push(g);
    }
    if graphs.is_empty() {
        return Err(SourceError::Empty);
    }

    if !trusted {
        if n > MAX_CANON_N {
            return Err(SourceError::DedupeUnavailable { n });
        }
        let mut canon = Canonicalizer::new();
        let mut seen = std::collections::HashMap::new();
        for (idx, g) in graphs.iter().enumerate() {
            let code = canon
                .canonical_form(g)
                .expect("order within canon cap")
                .code();
            if let Some(&first) = seen.get(&code) {
                return Err(SourceError::DuplicateClass {
                    path: path.to_path_buf(),
                    line: idx + 1,
                    first,
                });
            }
            seen.insert(code, idx + 1);
        }
    }

    let mut warnings = Vec::new();
    if let Some(&expected) = EXPECTED_CONNECTED_CLASSES.get(n) {
        if graphs.len() != expected {
            warnings.push(format!(
                "{}: {} graphs, but {} connected classes exist on {} vertices",
                path.display(),
                graphs.len(),
                expected,
                n
            ));
        }
    }
    Ok(LoadedGraphs { n, graphs, warnings })
}

/// Parses the edge-list text format: first line "n m", then m lines
/// "u v" with 0-indexed endpoints.
pub fn parse_edge_list(text: &str) -> Result<Graph, SourceError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line_no, header) = lines.next().ok_or(SourceError::Empty)?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| SourceError::BadEdgeList {
            line: line_no,
            detail: format!("expected \"n m\" header, got {header:?}"),
        })?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| SourceError::BadEdgeList {
            line: line_no,
            detail: format!("expected \"n m\" header, got {header:?}"),
        })?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines.next().ok_or_else(|| SourceError::BadEdgeList {
            line: 0,
            detail: format!("expected {m} edge lines, file ended early"),
        })?;
        let mut ends = line.split_whitespace();
        let parse = |t: Option<&str>| -> Option<usize> { t.and_then(|x| x.parse().ok()) };
        match (parse(ends.next()), parse(ends.next())) {
            (Some(u), Some(v)) => edges.push((u, v)),
            _ => {
                return Err(SourceError::BadEdgeList {
                    line: line_no,
                    detail: format!("expected \"u v\", got {line:?}"),
                })
            }
        }
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

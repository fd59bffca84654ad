//! Path-sequence censuses over graph populations, and the rule sweeps
//! that check every graph against the known properties of path sequences.
//!
//! Sweeps are parallel map/reduce over an immutable graph slice; results
//! are merged into ordered maps and sorted before they are returned, so
//! output is identical regardless of worker count.

use std::collections::BTreeMap;

use pathcover_core::sequence::sequence_feasibility;
use pathcover_core::solver::SolverError;
use pathcover_core::{encode_graph6, path_sequence, Graph, PathSequence};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::source::{load_graphs, GraphSource, SourceError};

#[derive(Error, Debug)]
pub enum CensusError {
    #[error("{0}")]
    Source(#[from] SourceError),
    #[error("{0}")]
    Solver(#[from] SolverError),
    #[error("sequence has {got} entries but the census graphs have {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
}

/// One distinct path sequence with its class count.
#[derive(Clone, Debug, Serialize)]
pub struct CensusRecord {
    #[serde(serialize_with = "serialize_sequence")]
    pub sequence: PathSequence,
    pub multiplicity: usize,
    #[serde(rename = "tree")]
    pub tree_realisable: bool,
}

fn serialize_sequence<S: serde::Serializer>(
    seq: &PathSequence,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(seq.values().iter().map(|&v| v as u64))
}

/// All distinct sequences of a graph population, ascending
/// lexicographically, with totals.
#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub total_graphs: usize,
    pub total_sequences: usize,
    pub records: Vec<CensusRecord>,
}

/// Census of an already-loaded population.
pub fn census_of_graphs(n: usize, graphs: &[Graph]) -> Result<CensusReport, CensusError> {
    let merged = graphs
        .par_iter()
        .map(|g| Ok((path_sequence(g)?, g.is_tree())))
        .try_fold(
            BTreeMap::<PathSequence, (usize, bool)>::new,
            |mut acc, item: Result<_, SolverError>| {
                let (seq, tree) = item?;
                let entry = acc.entry(seq).or_insert((0, false));
                entry.0 += 1;
                entry.1 |= tree;
                Ok::<_, SolverError>(acc)
            },
        )
        .try_reduce(BTreeMap::new, |mut left, right| {
            for (seq, (count, tree)) in right {
                let entry = left.entry(seq).or_insert((0, false));
                entry.0 += count;
                entry.1 |= tree;
            }
            Ok(left)
        })?;

    let records: Vec<CensusRecord> = merged
        .into_iter()
        .map(|(sequence, (multiplicity, tree_realisable))| CensusRecord {
            sequence,
            multiplicity,
            tree_realisable,
        })
        .collect();
    Ok(CensusReport {
        n,
        total_graphs: records.iter().map(|r| r.multiplicity).sum(),
        total_sequences: records.len(),
        records,
    })
}

/// Loads a source and runs the census on it. `connected_only` drops
/// disconnected graphs before sweeping (the built-in enumerator only
/// yields connected ones). Returns the report plus loader warnings.
pub fn run_census(
    source: &GraphSource,
    connected_only: bool,
) -> Result<(CensusReport, Vec<String>), CensusError> {
    let loaded = load_graphs(source)?;
    let graphs: Vec<Graph> = if connected_only {
        loaded
            .graphs
            .into_iter()
            .filter(|g| g.is_connected())
            .collect()
    } else {
        loaded.graphs
    };
    Ok((census_of_graphs(loaded.n, &graphs)?, loaded.warnings))
}

/// The property sweeps a graph population can be checked against.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Rule {
    /// A connected graph with psi_{n-1} = 2 must have a Hamilton path.
    Conjecture,
    /// Sequence shape (first entry, monotone, ceiling), the two-position
    /// bound, and "psi_k = n-k+1 forces connectivity".
    Bounds,
    /// For n <= 7: one entry at the n-k+1 ceiling forces every later
    /// entry onto the ceiling too.
    SuffixCompleteness,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Conjecture => "conjecture",
            Rule::Bounds => "bounds",
            Rule::SuffixCompleteness => "suffix",
        }
    }

    /// Parses a CLI rule name.
    pub fn parse(name: &str) -> Option<Rule> {
        match name {
            "conjecture" => Some(Rule::Conjecture),
            "bounds" => Some(Rule::Bounds),
            "suffix" => Some(Rule::SuffixCompleteness),
            _ => None,
        }
    }
}

/// A graph that broke a rule, with the rule and values involved.
#[derive(Clone, Debug)]
pub struct Violation {
    pub graph6: String,
    pub rule: &'static str,
    pub details: String,
}

/// Empty iff the sweep passed.
#[derive(Clone, Debug, Default)]
pub struct ViolationList {
    pub items: Vec<Violation>,
}

impl ViolationList {
    pub fn passed(&self) -> bool {
        self.items.is_empty()
    }
}

fn check_graph(g: &Graph, rules: &[Rule]) -> Result<Vec<Violation>, SolverError> {
    let n = g.order();
    let seq = path_sequence(g)?;
    let connected = g.is_connected();
    let mut out = Vec::new();
    for &rule in rules {
        match rule {
            Rule::Conjecture => {
                if connected && n >= 2 && seq.psi(n - 1) == 2 && seq.psi(n) != 1 {
                    out.push(Violation {
                        graph6: encode_graph6(g),
                        rule: rule.name(),
                        details: format!(
                            "psi_{} = 2 but psi_{} = {}",
                            n - 1,
                            n,
                            seq.psi(n)
                        ),
                    });
                }
            }
            Rule::Bounds => {
                for failure in sequence_feasibility(&seq) {
                    out.push(Violation {
                        graph6: encode_graph6(g),
                        rule: rule.name(),
                        details: format!("computed sequence {seq} breaks {failure}"),
                    });
                }
                if !connected {
                    for k in 2..=n {
                        if seq.psi(k) == n - k + 1 {
                            out.push(Violation {
                                graph6: encode_graph6(g),
                                rule: rule.name(),
                                details: format!(
                                    "psi_{k} = n-k+1 = {} on a disconnected graph",
                                    seq.psi(k)
                                ),
                            });
                        }
                    }
                }
            }
            Rule::SuffixCompleteness => {
                if n > 7 {
                    continue;
                }
                for k in 2..n {
                    if seq.psi(k) == n - k + 1 {
                        for j in k + 1..=n {
                            if seq.psi(j) != n - j + 1 {
                                out.push(Violation {
                                    graph6: encode_graph6(g),
                                    rule: rule.name(),
                                    details: format!(
                                        "psi_{k} = {} is maximal but psi_{j} = {} < {}",
                                        seq.psi(k),
                                        seq.psi(j),
                                        n - j + 1
                                    ),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Runs the given rules over every graph. Violations keep input order.
pub fn verify_graphs(graphs: &[Graph], rules: &[Rule]) -> Result<ViolationList, CensusError> {
    let mut indexed: Vec<(usize, Violation)> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| Ok(check_graph(g, rules)?.into_iter().map(move |v| (i, v))))
        .try_fold(Vec::new, |mut acc, items: Result<_, SolverError>| {
            acc.extend(items?);
            Ok::<_, SolverError>(acc)
        })
        .try_reduce(Vec::new, |mut a, mut b| {
            a.append(&mut b);
            Ok(a)
        })?;
    indexed.sort_by_key(|(i, _)| *i);
    Ok(ViolationList {
        items: indexed.into_iter().map(|(_, v)| v).collect(),
    })
}

/// Sweep for graphs with psi_{n-1} = 2 but no Hamilton path.
pub fn verify_conjecture(source: &GraphSource) -> Result<ViolationList, CensusError> {
    let loaded = load_graphs(source)?;
    verify_graphs(&loaded.graphs, &[Rule::Conjecture])
}

/// Sweep for sequence-shape violations, the two-position bound, the
/// connectivity implication, and (n <= 7) suffix completeness.
pub fn verify_bounds(source: &GraphSource) -> Result<ViolationList, CensusError> {
    let loaded = load_graphs(source)?;
    verify_graphs(
        &loaded.graphs,
        &[Rule::Bounds, Rule::SuffixCompleteness],
    )
}

/// Which graphs may witness a sequence.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum RealisationClass {
    Any,
    Tree,
}

/// All graphs in the population realising `sequence`, as graph6 strings
/// in input order, optionally restricted to trees.
pub fn find_realisations(
    sequence: &PathSequence,
    class: RealisationClass,
    n: usize,
    graphs: &[Graph],
) -> Result<Vec<String>, CensusError> {
    if sequence.len() != n {
        return Err(CensusError::LengthMismatch {
            expected: n,
            got: sequence.len(),
        });
    }
    let matches: Vec<(usize, String)> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let seq = path_sequence(g)?;
            let class_ok = match class {
                RealisationClass::Any => true,
                RealisationClass::Tree => g.is_tree(),
            };
            Ok((seq == *sequence && class_ok).then(|| (i, encode_graph6(g))))
        })
        .try_fold(Vec::new, |mut acc, item: Result<_, SolverError>| {
            if let Some(found) = item? {
                acc.push(found);
            }
            Ok::<_, SolverError>(acc)
        })
        .try_reduce(Vec::new, |mut a, mut b| {
            a.append(&mut b);
            Ok(a)
        })?;
    let mut matches = matches;
    matches.sort_by_key(|(i, _)| *i);
    Ok(matches.into_iter().map(|(_, g6)| g6).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::GraphSource;
    use pathcover_core::families::build_cycle;

    fn builtin(n: usize) -> GraphSource {
        GraphSource::Builtin { n }
    }

    #[test]
    fn census_n5_matches_published_table() {
        let (report, warnings) = run_census(&builtin(5), true).unwrap();
        assert!(warnings.is_empty());
        assert_eq!(report.total_graphs, 21);
        assert_eq!(report.total_sequences, 9);
        let expect: Vec<(&[u8], usize, bool)> = vec![
            (&[5, 1, 1, 0, 0], 1, true),
            (&[5, 2, 1, 1, 0], 2, true),
            (&[5, 2, 1, 1, 1], 1, true),
            (&[5, 2, 2, 1, 1], 5, false),
            (&[5, 3, 1, 1, 1], 2, false),
            (&[5, 3, 2, 1, 1], 2, false),
            (&[5, 3, 2, 2, 1], 5, false),
            (&[5, 3, 3, 2, 1], 2, false),
            (&[5, 4, 3, 2, 1], 1, false),
        ];
        assert_eq!(report.records.len(), expect.len());
        for (rec, (seq, mult, tree)) in report.records.iter().zip(expect) {
            assert_eq!(rec.sequence.values(), seq);
            assert_eq!(rec.multiplicity, mult, "multiplicity of {}", rec.sequence);
            assert_eq!(rec.tree_realisable, tree, "tree marker of {}", rec.sequence);
        }
    }

    #[test]
    fn sweeps_are_clean_for_n6() {
        assert!(verify_conjecture(&builtin(6)).unwrap().passed());
        assert!(verify_bounds(&builtin(6)).unwrap().passed());
    }

    #[test]
    fn cycle_is_not_a_conjecture_violation() {
        let c5 = build_cycle(5).unwrap();
        let list = verify_graphs(&[c5], &[Rule::Conjecture]).unwrap();
        assert!(list.passed());
    }

    #[test]
    fn realisations_in_n5_census() {
        let loaded = load_graphs(&builtin(5)).unwrap();
        let star: PathSequence = "5,1,1,0,0".parse().unwrap();
        let found =
            find_realisations(&star, RealisationClass::Any, 5, &loaded.graphs).unwrap();
        assert_eq!(found.len(), 1);
        let k5: PathSequence = "5,4,3,2,1".parse().unwrap();
        let found =
            find_realisations(&k5, RealisationClass::Any, 5, &loaded.graphs).unwrap();
        assert_eq!(found.len(), 1);

        let wrong_len: PathSequence = "4,1,1,0".parse().unwrap();
        assert!(matches!(
            find_realisations(&wrong_len, RealisationClass::Any, 5, &loaded.graphs),
            Err(CensusError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn determinism_across_worker_counts() {
        let render = |jobs: usize| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .unwrap();
            pool.install(|| {
                let (report, _) = run_census(&builtin(5), true).unwrap();
                crate::report::emit_table(&report, crate::report::TableFormat::Json)
            })
        };
        assert_eq!(render(1), render(4));
    }
}

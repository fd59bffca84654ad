//! Exact computation of k-path vertex cover numbers for small graphs.
//!
//! A set of vertices covers the k-vertex paths of a graph when every
//! simple path on k vertices meets it; the minimum size of such a set is
//! the k-th path number, and the vector of all of them is the graph's
//! path sequence. This crate computes those quantities exactly with a
//! subset dynamic program, provides a slow independent oracle, closed
//! forms for standard families, canonical forms and exhaustive
//! enumeration for small graphs, and the constructions that realise
//! prescribed path numbers.
//!
//! The crate is `no_std` (alloc only); IO, file formats and the census
//! driver live in the companion `pathcover` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod canon;
pub mod constructions;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod sequence;
pub mod solver;

pub use canon::{canonical_form, enumerate_connected, CanonicalForm, Canonicalizer};
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use graph6::{decode_graph6, encode_graph6, Graph6Error};
pub use sequence::{sequence_feasibility, FeasibilityFailure, PathSequence};
pub use solver::{
    has_hamilton_path, longest_path_table, minimum_k_pvcs, path_sequence, path_witness_table,
    psi_k, LongestPathTable, PathWitnessTable, SolverError, MAX_SOLVER_N,
};

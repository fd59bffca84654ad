//! Census driver, file formats and report rendering around
//! [`pathcover_core`]. The `pathcover` binary in this crate exposes the
//! whole toolkit on the command line.

pub mod census;
pub mod report;
pub mod source;

pub use census::{
    census_of_graphs, find_realisations, run_census, verify_bounds, verify_conjecture,
    verify_graphs, CensusError, CensusRecord, CensusReport, RealisationClass, Rule, Violation,
    ViolationList,
};
pub use report::{emit_table, TableFormat};
pub use source::{
    load_graph6_file, load_graphs, parse_edge_list, GraphSource, LoadedGraphs, SourceError,
    EXPECTED_CONNECTED_CLASSES,
};

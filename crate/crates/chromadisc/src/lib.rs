//! Exact computation and verification toolkit for the chromatic
//! discrepancy of small graphs.
//!
//! For a proper coloring of a graph, the discrepancy of an induced
//! subgraph is the number of colors appearing on it minus its chromatic
//! number; the graph's chromatic discrepancy minimizes, over proper
//! colorings, the worst such gap, and the connected variant restricts the
//! subgraphs to connected ones. This crate provides:
//!
//! - a bit-mask graph type on up to 64 vertices with graph6 and edge-list
//!   serialization ([`graph`]),
//! - exact classical invariants and a proper-partition enumerator
//!   ([`invariants`]),
//! - exact discrepancy solvers with self-certifying witnesses
//!   ([`discrepancy`]),
//! - recognizers for the zero-discrepancy characterizations
//!   ([`characterize`]),
//! - every known bound as an executable check ([`bounds`]),
//! - deterministic constructors for the graph families the bounds are
//!   tight on ([`families`]).

pub mod bounds;
pub mod characterize;
pub mod discrepancy;
pub mod families;
pub mod graph;
pub mod invariants;
mod rng;
mod search;

pub use bounds::{
    compute_report, csv_rows, diameter_lemma_bound, gap_bounds, haxell_lower_bound,
    local_chromatic_lower_bound, subgraph_gap_lower_bound, upper_bounds, verify_all, BoundEntry,
    BoundReport, BoundsError, DiameterLemmaReport, ReportBundle, CSV_HEADER,
};
pub use characterize::{
    is_bipartite, is_complete_multipartite, is_paw_free, is_perfect_small,
    is_perfect_small_with_cap, phi_hat_zero_characterization, CharacterizeError,
};
pub use discrepancy::{
    optimal_coloring_profile, phi_exact, phi_hat_exact, phi_hat_of_coloring, phi_of_coloring,
    ColoringProfile, SolverBudget, SolverError, Witness,
};
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use invariants::{
    achromatic_number, chromatic_number, clique_number, independence_number, is_triangle_free,
    local_chromatic_number, max_degree, proper_partitions, Coloring, Flags, InvariantError,
    ParamReport,
};

//! Maximum clique search with greedy-colouring bounds.
//!
//! The crate covers graph I/O ([`dimacs`]), the two greedy colouring
//! procedures and what they imply ([`colouring`]), branch and bound in a
//! baseline and an inherited-bound variant with instrumentation for
//! misleading-bound events ([`search`]), and the experiment runner that
//! compares the two ([`experiment`]).

pub mod bitset;
pub mod colouring;
pub mod dimacs;
pub mod error;
pub mod experiment;
pub mod fixtures;
pub mod graph;
pub mod search;

pub use bitset::BitSet;
pub use colouring::{
    find_all_misleading_vertices, find_misleading_vertex, forced_members, greedy_colour_classwise,
    greedy_colour_vertexwise, Colouring, Forced, MisleadingWitness,
};
pub use dimacs::{parse_dimacs, to_dimacs, DimacsWarning, ParsedDimacs};
pub use error::{DimacsError, DimacsErrorKind, GraphError, SearchError};
pub use experiment::{run_experiment, Experiment, ExperimentError, ExperimentRow, ExperimentSummary, Instance};
pub use graph::{make_ordering, random_graph, Graph, OrderingPolicy, VertexOrdering};
pub use search::{
    brute_force_omega, compare_variants, solve, solve_max_clique, solve_parallel, BoundPassing, ComparisonReport,
    SearchConfig, SearchOutcome, Variant,
};

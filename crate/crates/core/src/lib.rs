//! Profiles of small graphs: how many free vertices a graph has
//! (vertices whose neighborhood is a clique), how far apart its
//! vertices get, and how many vertex deletions disconnect it.
//!
//! The crate measures the profile (f, d, k) of any graph on up to 64
//! vertices, decides by closed form which profiles exist at a given
//! order, builds a self-verified witness graph for every profile that
//! does, and cross-checks the closed forms against exhaustive
//! enumeration at small orders.

pub mod analysis;
pub mod codec;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod realizability;
pub mod recipe;

pub use analysis::{
    analyze, diameter, distance, free_count, free_vertices, is_connected, is_free_vertex,
    local_connectivity, vertex_connectivity, AnalysisReport, DeltaTriple,
};
pub use codec::{decode_graph6, encode_graph6, from_json, to_dot, to_json};
pub use constructions::{
    complete, complete_bipartite, cycle, disjoint_union, duplicate_vertex, join, path,
};
pub use enumeration::{
    brute_force_kappa, canonical_form, census, census_with_workers, for_each_connected_graph,
    search_triple, verify_inequality_exhaustive, CensusEntry, CensusTable, InequalityScan,
    Universe,
};
pub use error::{Error, Result};
pub use graph::{Graph, MAX_VERTICES};
pub use realizability::{
    construct_witness, feasible, inequality_bound_holds, soundness_sweep, witnesses_for_phi,
    Clause, FeasibilityVerdict, Query, SweepReport,
};
pub use recipe::{RecipeStep, WitnessRecipe};

//! Line, Gallai and anti-Gallai simplicial complexes of finite simple
//! graphs.
//!
//! Starting from a graph `G`, the crate extracts the three index families
//! (3-sets of vertices covered by incident edge pairs, split by whether
//! the pair spans a triangle, plus 2-sets for isolated edges), builds the
//! simplicial complexes they generate, and computes their combinatorial
//! invariants: f-vector, Euler characteristic, dimension, purity and
//! facet-chain connectedness. Shellability is decided by two independent,
//! cross-checked criteria: the direct shelling-order definition and the
//! linear-residuals condition on the ordered facet ideal.
//!
//! The [`suites`] module packages the verification sweeps (closed-form
//! family invariants, exhaustive small-graph corpora, shelling verdicts,
//! oracle cross-checks) that back the `simplicial-lines verify` command.
//!
//! Corpus sweeps and the subset-ordering search run data-parallel under
//! the default `parallel` feature and fall back to sequential execution
//! without it; results are identical either way.

pub mod checks;
pub mod complex;
pub mod derived;
mod dsu;
pub mod face;
pub mod graph;
pub mod ideal;
pub mod indices;
pub mod io;
pub mod report;
pub mod shelling;
pub mod suites;
mod sweep;

pub use complex::{
    anti_gallai_complex, gallai_complex, line_complex, ComplexError, FVector, SimplicialComplex,
};
pub use derived::{anti_gallai_graph, gallai_graph, line_graph, EdgeVertexGraph};
pub use face::Face;
pub use graph::{
    complete_graph, cycle_graph, enumerate_graphs, friendship_graph, path_graph, prism_graph,
    star_graph, wheel_graph, Edge, GraphError, SimpleGraph,
};
pub use ideal::{facet_ideal, minimal_generators, FacetIdeal, IdealError, Monomial};
pub use indices::{anti_gallai_indices, gallai_indices, line_indices, IndexFamily, IndexKind};
pub use shelling::{
    find_shelling_order, has_linear_residuals, shelling_step_ok, step_linear, verify_ordering,
    Method, SearchOptions, ShellingCertificate, ShellingError, Verdict, DEFAULT_SEARCH_BOUND,
};

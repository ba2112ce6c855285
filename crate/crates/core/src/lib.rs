//! Unit-cube representations of bipartite graphs.
//!
//! A bipartite graph `G = (A ∪ B, E)` is written as the intersection of unit
//! interval graphs: `t` randomized supergraphs that remove every cross
//! non-edge with good probability, plus two bit-encoding families that remove
//! all same-side pairs. Scaling each interval graph to unit length gives one
//! axis of a `k`-cube per vertex, with `k = t + ⌈log₂ n1⌉ + ⌈log₂ n2⌉` and
//! `t = ⌈3(Δ' + 1) ln n2⌉` by default, where `Δ'` is the smaller of the two
//! sides' maximum degrees.
//!
//! Every build is checked exactly and retried on failure, so a returned
//! representation is always correct.
//!
//! ```
//! use cubicity::{build_representation, gen_random_bipartite, verify, BuildParams};
//!
//! let g = gen_random_bipartite(6, 10, 0.3, 1).unwrap();
//! let build = build_representation(&g, &BuildParams::with_seed(7)).unwrap();
//! assert!(verify(&build.representation, &g).unwrap().passed());
//! ```

pub mod bench;
pub mod builder;
pub mod cli;
pub mod dump;
pub mod error;
pub mod format;
pub mod graph;
pub mod hfamily;
pub mod interval;
pub mod probe;
pub mod randunit;
pub mod verify;

pub use builder::{build_representation, estimate_failure_rate, Build, BuildParams, BuildReport};
pub use error::{
    BuildError, DumpError, GraphError, ParseError, PermutationError, RepError, SurvivalError,
};
pub use format::{parse_graph, serialize_graph};
pub use graph::{
    gen_random_bipartite, normalize_sides, BipartiteGraph, DegreeProfile, Side, Vertex,
};
pub use hfamily::{build_h_family, intersection_of_family, BitEncodingFamily};
pub use interval::{
    induced_graph, intersect_graphs, CubeRepresentation, Dimension, Provenance, SimpleGraph,
    UnitIntervalRep,
};
pub use randunit::{build_u, random_permutation, randunit, Permutation};
pub use verify::{verify, Verification, Violation, ViolationKind};

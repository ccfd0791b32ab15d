//! Parity-constrained anti-Ramsey numbers: exact search over edge colorings
//! of `K_n`, explicit lower-bound constructions, certificates, and the
//! vertex-ordering problems that come with them.

pub mod coloring;
pub mod constructions;
pub mod embeddings;
pub mod error;
pub mod graph;
pub mod orientations;
pub mod predicates;
pub mod registry;
pub mod search;
pub mod witness;

pub use coloring::{edge_count, edge_index, edge_pairs, EdgeColoring};
pub use error::{Error, Result};
pub use graph::{parse_graph, CatalogId, Graph};
pub use predicates::{check, class_decomposition, ColoredCopy, PhiKind};
pub use embeddings::{enumerate_copies, find_canonical_clique, find_good_copy, CliqueTag, CopyIndex};
pub use search::{
    avoidable, critical_colors, phi_exact, search, verify_lower_bound, Budget, ClassShape, Goal, SearchConfig,
    SearchOutcome,
};
pub use constructions::{claimed_colors, generate, parse_pattern, PatternSpec};
pub use orientations::{OrderingKind, OrderingResult};
pub use registry::{cf_upper_bound, check_hierarchy, HierarchyDag, Known, Registry};
pub use witness::{emit_witness, load_witness, Witness};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/predicates.md")]
    mod predicates {}
    #[doc = include_str!("../../../book/src/copies.md")]
    mod copies {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/witnesses.md")]
    mod witnesses {}
    #[doc = include_str!("../../../book/src/registry.md")]
    mod registry {}
    #[doc = include_str!("../../../book/src/orientations.md")]
    mod orientations {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

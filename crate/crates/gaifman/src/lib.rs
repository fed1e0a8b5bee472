//! Co-occurrence analysis through clan decompositions of generalized
//! Gaifman graphs.
//!
//! The pipeline: ingest a relational or transactional dataset, count
//! pairwise co-occurrences, turn the counts into a symmetric 2-structure
//! (standard, thresholded, linear or exponential variant), and compute
//! its strong-clan decomposition tree incrementally. The implication
//! view connects the same structures to closure spaces: closed sets are
//! exactly clans, strong closures are strong clans, and a graph can be
//! rebuilt from its implications up to complement.
//!
//! Brute-force oracles for clans, strong clans and decomposition trees
//! live in [`oracle`] and back the test suite.

pub mod dataset;
pub mod decompose;
pub mod error;
pub mod implications;
pub mod io;
pub mod model;
pub mod oracle;
pub mod reconstruct;
pub mod registry;

pub use dataset::{
    build_exponential, build_linear, build_standard, build_thresholded, count_cooccurrences,
    ingest_relational, ingest_transactional, CooccurrenceCounts, Dataset, ItemFilter,
};
pub use decompose::{
    decompose, decompose_with_order, DecompositionTree, InsertCase, NodeId, NodeKind,
    VisibilityPartition,
};
pub use error::{Error, Result};
pub use implications::{
    distinguishing_set, generate_implications, infer_clan_type, lattice_to_tree, ClanType,
    ClosureLattice, Implication, ImplicationSet, SkeletonNode, TypeBound, LATTICE_GUARD,
};
pub use model::{EdgeClass, Item, ItemId, TwoStructure};
pub use oracle::{
    all_clans, brute_force_tree, has_induced_p4, is_clan, quotient_structure, random_structure,
    strong_clans, verify_tree_nodes, SplitMix64, ORACLE_GUARD,
};
pub use reconstruct::{build_pair_graph, pair_path, reconstruct, verify_roundtrip, PairGraph};
pub use registry::{EdgeRegistry, Endpoint, RegistryStats};

//! Finite-group computation engine for the non-commuting, non-generating
//! graph: group construction from a small DSL, subgroup lattices, graph
//! analysis, and mechanical verification of structural classifications.

#![forbid(unsafe_code)]

pub mod classify;
pub mod construct;
pub mod gf2k;
pub mod graph;
pub mod group;
pub mod lattice;
pub mod par;
pub mod spec;
pub mod subgroup;
pub mod suzuki;

pub use construct::{construct, construct_capped, ConstructError, DEFAULT_ORDER_CAP};
pub use graph::{build_graph, component_summary, ComponentSummary, GraphKind, GroupGraph};
pub use group::FiniteGroup;
pub use lattice::{all_subgroups, maximal_data, sylow, Lattice, MaximalData, DEFAULT_LATTICE_CAP};
pub use spec::GroupSpec;
pub use subgroup::SubgroupSet;

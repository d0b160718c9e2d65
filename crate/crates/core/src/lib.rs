//! Crossing model for regular `A_n`-crystals: feasible integer functions on a
//! supporting graph, the crystal operators acting on them, and tools to
//! generate, verify and decompose the resulting crystals.

pub mod axioms;
pub mod crystal;
pub mod error;
pub mod gt;
pub mod moves;
pub mod structure;
pub mod support_graph;
pub mod weights;

pub use axioms::{
    check_a1, check_a2, check_a3, check_a4, check_a5, check_all, check_connectivity, check_equal_criticals,
    check_gradedness, check_source_sink, first_failure, lines_and_critical, parse_crystal_json, parse_edge_list, Check,
    ColoredDigraph, LineInfo, Lines, Report, Verdict,
};
pub use crystal::{
    generate, generate_zero, isomorphic, isomorphism, source_sink_distance, weyl_dimension, CrystalGraph, CrystalJson,
    EdgeJson, VertexAttrs, VertexJson, DEFAULT_CAP,
};
pub use error::{Error, Result};
pub use gt::{count_bounded_patterns, enumerate_bounded_patterns, from_gt, sigma_bound, to_gt, GtPattern};
pub use moves::{
    active_multinode, backward_move, forward_move, level_slacks, residual_slacks, residual_slacks_by_cancelation,
    string_lengths, LevelSlacks, MoveOutcome,
};
pub use structure::{
    apply_string, branching_multiplicity, branching_multiplicity_closed_form, canonical_string, decompose,
    fundamental_strings, middle_parameter, predicted_parameter, principal_interval, principal_lattice,
    principal_location, skeleton, skeleton_size_formula, subcrystal_graph, subcrystals, DecompositionReport,
    FundamentalString, PrincipalLattice, Side, Skeleton, SkeletonPiece, SubcrystalRecord,
};
pub use support_graph::{build_supporting_graph, Multinode, Neighbors, NodeClass, NodeRef, Rhombus, SupportingGraph};
pub use weights::{
    is_feasible, principal_function, switch_node, Bounds, Condition, Direction, Violation, WeightFunction,
    WeightFunctionJson,
};

//! A graph-width toolkit around branch decompositions whose cut complexity
//! is measured by induced matchings: it constructs decompositions of
//! sim-width at most 1 for chordal and co-comparability graphs, detects the
//! clique matching patterns that bound their mim-width, generates the
//! extremal families witnessing the lower bounds, computes exact widths of
//! tiny graphs by enumeration, and solves locally checkable vertex subset
//! and partitioning problems by dynamic programming over a decomposition.

pub mod bitset;
pub mod chordal;
pub mod chordality;
pub mod cocomp;
pub mod cut;
pub mod decomposition;
pub mod error;
pub mod generators;
pub mod gf2;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod patterns;
pub mod solver;

pub use chordal::{chordal_branch_decomposition, clique_tree, one_sided_clique_certificate};
pub use chordality::{chordality_check, Chordality};
pub use cocomp::{cocomp_linear_decomposition, find_cocomp_ordering, verify_cocomp_ordering};
pub use cut::{cutrk, mimval, simval, Cut, CutFunctionKind, MatchingWitness};
pub use decomposition::{
    balanced_cut, caterpillar_from_ordering, contract_decomposition, f_width, BranchDecomposition,
    TreeEdge, WidthReport,
};
pub use error::{Error, Result};
pub use graph::{Graph, VertexId, VertexSet};
pub use oracle::{exact_linear_width, exact_width};
pub use patterns::{detect_ktkt, detect_ktst, PatternKind, PatternWitness};
pub use solver::{
    brute_dq, brute_sigma_rho, check_dq_partition, check_sigma_rho, solve_dq_partition,
    solve_sigma_rho, DegreeConstraintMatrix, FinCofSet, Objective, Problem,
};

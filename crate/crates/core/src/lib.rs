//! Exact partial list coloring on small graphs.
//!
//! For a graph `G` and a list assignment `L`, λ_L(G) is the largest number of
//! vertices that can be properly colored from their lists, and λ_t(G) is the
//! minimum of λ_L over all assignments giving every vertex `t` colors. This
//! crate computes those quantities exactly, together with χ, α and the list
//! chromatic number χ_ℓ, and evaluates the known inequalities between them
//! (and two open conjectures) in exact integer arithmetic.
//!
//! * [`graph`]: graphs, graph6 and edge-list I/O, named families.
//! * [`assignment`]: list assignments, partial colorings, their algebra.
//! * [`solver`]: λ_L, χ, α.
//! * [`adversary`]: canonical assignment enumeration, λ_t, χ_ℓ, tables.
//! * [`checks`]: the inequality and conjecture verdicts.
//! * [`lab`]: catalog runs, the results cache, counterexample hunting.

pub mod adversary;
pub mod assignment;
pub mod checks;
pub mod error;
pub mod graph;
pub mod lab;
pub mod rng;
pub mod solver;

pub use adversary::{
    enumerate_canonical_assignments, lambda_t, lambda_t_oracle, lambda_table, lambda_table_with, list_chromatic_number,
    AdversaryOptions, AdversaryResult, Caps, LambdaTable,
};
pub use assignment::{
    combine_assignments, is_sub_assignment, restrict_assignment, split_coloring, CombinedAssignment, ListAssignment,
    PartialColoring,
};
pub use error::{Error, ParseError, Result};
pub use graph::{FamilySpec, Graph, VertexSet};
pub use solver::{
    alon_tarsi_certifies, chromatic_number, independence_number, is_list_colorable, lambda_of_assignment,
    lambda_of_assignment_oracle, max_partial_constant, SolveResult,
};

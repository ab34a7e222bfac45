//! Token graphs `F_k(G)`: construction, exact matching and independence
//! numbers, executable constructive witnesses, and closed-form evaluators.

pub mod constructions;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod independence;
pub mod matching;
pub mod report;
pub mod subset;
pub mod token;
pub mod verify;

pub use constructions::{
    cycle_independent_set, cycle_layer, f2_matching_construction, isolated_tokens, layers_linked,
    lemma_times_combine, theorem1_matching, witness_graph_large_s, witness_graph_small_s, LayerSet,
    TokenMatching, WitnessGraph,
};
pub use error::{Error, Result};
pub use formulas::{
    beta_balanced_family, beta_cycle_f2, beta_kmn_f2, beta_star, class_order_predicate,
    conjecture_scan, counterexample_scan_2x5, nu_token_formula, oeis_check, r_value, s_threshold,
    FormulaValue, Number, Sequence, ValueKind,
};
pub use graph::{bipartition_of, family, Bipartition, Family, Graph, Relabeling, Side};
pub use independence::{
    beta_token, beta_via_saturation, brute_force_mis, max_independent_set,
    max_independent_set_with_budget, recursive_bounds, vertex_transitive_bound, BetaOracle,
    BoundsPair, Budget, IndependentSet, SolverOracle,
};
pub use matching::{hall_witness, matching_fraction_bound, max_matching, saturates, Matching};
pub use report::{ReportRow, Status, VerificationReport};
pub use subset::{binomial, Subset};
pub use token::{complement_map, token_bipartition, token_graph, SubsetCodec, TokenGraph};
pub use verify::{run_suite, SuiteId, VerifyOptions};

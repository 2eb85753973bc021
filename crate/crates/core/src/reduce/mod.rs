//! Constructive transformations between problem instances, each paired with
//! an executable check of the value correspondence it guarantees.

mod clique;
mod duplication;
mod formulas;
mod product;
mod verify;

pub use clique::{clique_to_mweb, max_clique_size, SimpleGraph, MAX_CLIQUE_ORACLE_VERTICES};
pub use duplication::{block_duplicate, default_problem_p_copies, mweb_to_problem_p, problem_p_bounds};
pub use formulas::{
    amplification_factor, boosting_exponent, ratio_window, skewed_weight_set, theoretical_n,
    within_ratio_window, AmplificationParams,
};
pub use product::{gamma_product, project_solution, ProductParams};
pub use verify::{
    verify_reduction, Check, ReductionInstance, ReductionKind, Relation, VerificationReport,
    MAX_BICLIQUE_ORACLE_SIDE,
};

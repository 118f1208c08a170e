//! Mahonian polynomials by enumeration and by recursion, counting formulas,
//! product formulas, and the registry of named identity checks.

mod checks;
mod formulas;
mod mahonian;

pub use checks::{
    default_grid, printed_table, run_checks, run_identity_check, CheckParams, CheckReport, GridOptions, Side, CHECK_NAMES,
};
pub use formulas::{
    closed_form, even_isotropic_count, isotropic_subspace_count, q_binomial, q_binomial_product, q_integer,
    qbinomial_theorem_sides, ClosedForm,
};
pub use mahonian::{mahonian_direct, mahonian_recursive, StatisticSpec};

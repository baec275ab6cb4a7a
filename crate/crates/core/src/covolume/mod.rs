//! Euler characteristics of principal arithmetic subgroups of `SO(1, 2r)`,
//! closed forms for the minimal ones, and lower bounds for maximal ones.

mod bounds;
mod chi;
mod closed_forms;
mod spec;

pub use bounds::{
    chi_lower_bound, class_number_bound, class_number_bound_for, field_lower_bound,
    local_excess_factor, BOUND_PRECISION,
};
pub use chi::{
    chi_principal, chi_principal_with, euler_factor, index_bound, ChiResult, ChiValue, ZetaMode,
};
pub use closed_forms::{
    c_of_r, c_of_r_at, chi_closed_form_compact, chi_closed_form_noncompact,
    chi_unimodular_stabilizer, compact_lambda, hyperbolic_volume, hyperbolic_volume_at,
    noncompact_lambda, structure_constants, unimodular_branch_factor,
};
pub use spec::{minimal_bad_places, minimal_group, GroupSpec, DEFAULT_NORM_BOUND};

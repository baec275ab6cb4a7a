//! Special values of Riemann, Dirichlet and Dedekind zeta functions.

mod analytic;
mod character;
mod dedekind;
mod integrality;

pub use analytic::{
    abelian_zeta_positive_enclosure, dirichlet_l_positive_enclosure, euler_product_enclosure,
    hurwitz_zeta_enclosure,
};
pub use character::{
    dirichlet_l_negative, generalized_bernoulli, kronecker_character, riemann_zeta_negative,
    DirichletCharacter,
};
pub use dedekind::{
    dedekind_zeta_negative, dedekind_zeta_negative_with, dedekind_zeta_positive,
    dedekind_zeta_positive_enclosure, dedekind_zeta_positive_enclosure_at,
    default_denominator_bound, functional_equation_factor, negative_value_sign, ZetaMethod,
    ZetaOptions, ZetaValue,
};
pub use integrality::integrality_multiple;

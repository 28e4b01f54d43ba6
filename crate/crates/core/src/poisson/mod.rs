//! The Poisson-Lie superbracket on the double and its identity suites.

mod bracket;
mod suites;

pub use bracket::{Bracket, RMatrixTable};
pub use suites::{
    coproduct_morphism_defect, in_sdet_ideal, jacobi_defect, star_compat_defect, tensor_bracket, verify_c_operator,
    verify_coproduct_morphism, verify_ideals, verify_jacobi, verify_sdet_compat, verify_star_compat, verify_wzw,
    SuiteConfig,
};

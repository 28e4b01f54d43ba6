//! The normalized basis of `sl(m|n)`, the double `d = g ∔ b` with its dual
//! bases, the Baxter operator `R = P_b − P_g` and the graded real structure.

pub mod basis;
pub mod double;
pub mod real;
pub mod verify;

pub use basis::{build_sl_basis, BasisKind, BasisLabel, BasisVector, SlBasis, Triangle};
pub use double::{build_double_basis, decompose, decompose_oracle, in_b, in_g, r_operator, DoubleBasis, Side};
pub use real::{fixed_point_dims, k_matrix, k_twist, phi_double, twist_conjugator};
pub use verify::{
    structure_constants, verify_basis_duality, verify_baxter, verify_manin, verify_real_form, verify_triangular,
    StructureConstant,
};

//! The degree-truncated supercommutative Hopf superalgebra of the double:
//! Koszul-signed polynomials and tensors, coproduct, counit, antipode,
//! superdeterminant, the graded `⋆`-structure and the quotient maps.

pub mod algebra;
pub mod monomial;
pub mod poly;
pub mod tensor;
pub mod verify;

pub use algebra::{star_sign, HopfAlgebra};
pub use monomial::{double_generators, generators, Gen, Kind, Monomial};
pub use poly::SuperPoly;
pub use tensor::TensorPoly;

//! Exact verification kernel for the Poisson-Lie superbracket on the realified
//! double of `SL(m|n, ℂ)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`scalar`]: exact arithmetic in `ℚ(i)[√2, √3, …]`
//! - [`supermatrix`]: graded matrices, supertrace, superbracket, scalar products
//! - [`liealg`]: the normalized basis, the double, `R = P_b − P_g`, the real structure
//! - [`hopf`]: truncated supercommutative Hopf algebra, antipode, `sdet`, `⋆`, quotients
//! - [`calculus`]: ε-derivations and the invariant superderivations `∇^L`, `∇^R`
//! - [`poisson`]: the superbracket and its identity suites
//! - [`duality`]: cotangent Lie superalgebras and the dual families
//! - [`cli`]: configuration, suite dispatch, reports and exports

pub mod calculus;
pub mod cli;
pub mod duality;
pub mod error;
pub mod hopf;
pub mod liealg;
pub mod linalg;
pub mod poisson;
pub mod report;
pub mod scalar;
pub mod supermatrix;

pub use error::{Error, Result};
pub use scalar::{Gaussian, RadicalScalar, Rational};
pub use supermatrix::{sp_double, sp_sl, BlockShape, DoubleElement, Parity, SuperMatrix};

//! The Poisson-Lie superbracket: single-index and double-index forms agree,
//! and super-Jacobi holds on a sample triple.

use superpl::hopf::{HopfAlgebra, Kind};
use superpl::liealg::build_double_basis;
use superpl::poisson::{jacobi_defect, Bracket, RMatrixTable};
use superpl::supermatrix::BlockShape;

fn main() {
    let sh = BlockShape::new(2, 1).unwrap();
    let b = build_double_basis(sh).unwrap();
    let h = HopfAlgebra::new(sh, 3);
    let sum = Bracket::sum(&b, 3).unwrap();
    let general = Bracket::general(&RMatrixTable::standard(&b).unwrap(), 3).unwrap();

    let (u11, w12, u13) = (h.u(Kind::Y, 0, 0), h.u(Kind::Z, 0, 1), h.u(Kind::Y, 0, 2));
    let br = sum.apply(&u11, &w12).unwrap();
    println!("{{u11, w12}} = {br}");
    assert_eq!(br, general.apply(&u11, &w12).unwrap());
    println!("{{u13, u13}} = {}", sum.apply(&u13, &u13).unwrap());

    let d = jacobi_defect(&sum, &u11, &w12, &u13).unwrap();
    println!("Jacobi defect on (u11, w12, u13): {}", if d.is_zero() { "0".to_string() } else { d.to_string() });
}

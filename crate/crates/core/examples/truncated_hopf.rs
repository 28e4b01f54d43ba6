//! The degree-truncated Hopf superalgebra: coproduct, antipode, ⋆ and sdet.

use superpl::hopf::verify::verify_hopf_axioms;
use superpl::hopf::{HopfAlgebra, Kind};
use superpl::supermatrix::BlockShape;

fn main() {
    let h = HopfAlgebra::new(BlockShape::new(2, 1).unwrap(), 2);
    let u13 = h.u(Kind::Y, 0, 2);
    println!("u13          = {u13}");
    println!("Delta(u13)   = {}", h.coproduct(&u13));
    println!("S(u11)       = {}", h.antipode(&h.u(Kind::Y, 0, 0)));
    println!("(u13)*       = {}", h.star(&u13));
    println!("((u13)*)*    = {}", h.star(&h.star(&u13)));
    println!("sdet(1+Y)    = {}", h.sdet(Kind::Y));

    let s = verify_hopf_axioms(&h);
    println!("{}: {}/{} cells", s.name, s.passed, s.attempted);
}

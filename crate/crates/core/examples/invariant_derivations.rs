//! Left and right invariant superderivations ∇^L, ∇^R on generators, and
//! their commutator laws.

use superpl::calculus::{nabla_l, nabla_r, verify_calculus};
use superpl::hopf::{HopfAlgebra, Kind};
use superpl::liealg::{build_double_basis, Side};
use superpl::supermatrix::BlockShape;

fn main() {
    let sh = BlockShape::new(2, 1).unwrap();
    let b = build_double_basis(sh).unwrap();
    let h = HopfAlgebra::new(sh, 2);
    let x = b.get(Side::T(3));
    let f = h.u(Kind::Y, 0, 2);
    println!("M          = {}", b.label(Side::T(3)));
    println!("nabla^R f  = {}", nabla_r(x, &f).unwrap());
    println!("nabla^L f  = {}", nabla_l(x, &f).unwrap());

    let h3 = HopfAlgebra::new(sh, 3);
    let (suite, laws) = verify_calculus(&b, &h3);
    println!("{}: {}/{} cells", suite.name, suite.passed, suite.attempted);
    if let (Some(l), Some(r)) = (laws.left, laws.right) {
        println!("left:  {}", l.describe());
        println!("right: {}", r.describe());
    }
}

//! Graded matrices of sl(2|1): parity, superbracket, supertrace, the form sp_sl.

use superpl::scalar::RadicalScalar;
use superpl::supermatrix::{sp_sl, BlockShape, SuperMatrix};

fn main() {
    let sh = BlockShape::new(2, 1).unwrap();
    let x = SuperMatrix::e(sh, 1, 3);
    let y = SuperMatrix::e(sh, 3, 2);
    let h = SuperMatrix::e(sh, 1, 1).add(&SuperMatrix::e(sh, 3, 3));
    println!("|E13| = {:?}, |E32| = {:?}, |E11+E33| = {:?}", x.parity(), y.parity(), h.parity());
    println!("Str(E11+E33) = {}", h.supertrace());

    let xy = x.superbracket(&y).unwrap();
    println!("[E13, E32] = {xy}");
    println!("Str [E13, E32] = {}", xy.supertrace());
    println!("sp_sl(E13, E31) = {}", sp_sl(&x, &SuperMatrix::e(sh, 3, 1)));

    // odd-odd superbracket is symmetric, even-odd is antisymmetric
    assert_eq!(xy, y.superbracket(&x).unwrap());
    let e11 = SuperMatrix::e(sh, 1, 1);
    let ex = e11.superbracket(&x).unwrap();
    assert_eq!(ex, x.superbracket(&e11).unwrap().scale(&-RadicalScalar::one()));
    println!("[E11, E13] = {ex}");
}

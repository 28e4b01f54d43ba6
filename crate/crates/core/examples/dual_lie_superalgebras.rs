//! The cotangent space Kerε/(Kerε)²: dual families, the induced brackets on
//! G* and B*, and the transports to b and g.

use superpl::duality::{induced_bracket, omega, verify_duality, DualFamilies};
use superpl::hopf::HopfAlgebra;
use superpl::liealg::build_double_basis;
use superpl::poisson::Bracket;
use superpl::supermatrix::BlockShape;

fn main() {
    let sh = BlockShape::new(2, 1).unwrap();
    let b = build_double_basis(sh).unwrap();
    let h = HopfAlgebra::new(sh, 3);
    let fam = DualFamilies::corrected(&b, 3);
    println!("f_1 = {}", fam.f[0]);
    println!("g_1 = {}", fam.g[0]);

    let br = Bracket::sum(&b, 3).unwrap();
    let w = induced_bracket(&br, &fam.f[0], &fam.f[2]).unwrap();
    let (on_g, on_b) = w.components(&b);
    println!("[Ω f_1, Ω f_3] = {w}");
    println!("  on Ω(f_k): {:?}", on_g.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    println!("  on Ω(g_k): all zero = {}", on_b.iter().all(|c| c.is_zero()));
    println!("Ω(f_1 g_1) = {}", omega(&(&fam.f[0] * &fam.g[0])).unwrap());

    let s = verify_duality(&b, &h).unwrap();
    println!("{}: {}/{} cells", s.name, s.passed, s.attempted);
    for n in &s.notes {
        println!("  note: {n}");
    }
}

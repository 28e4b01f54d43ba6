//! The double d = g ∔ b with dual bases T_i, t_i, the operator R = P_b − P_g
//! and the real structure φ, checked by the Baxter-Lie suites.

use superpl::liealg::{build_double_basis, fixed_point_dims, phi_double, r_operator, verify_baxter, verify_manin, Side};
use superpl::supermatrix::{sp_double, BlockShape};

fn main() {
    let sh = BlockShape::new(1, 2).unwrap();
    let b = build_double_basis(sh).unwrap();
    println!("dim sl{sh} = {}", b.len());
    for i in 0..3 {
        let (t, s) = (Side::T(i), Side::Small(i));
        println!("{:<12} {}", b.label(t), b.get(t));
        println!("{:<12} {}", b.label(s), b.get(s));
        println!("  (T, t) = {}", sp_double(b.get(t), b.get(s)));
    }
    let x = b.get(Side::T(0));
    println!("R T_1   = {}", r_operator(x).unwrap());
    println!("phi T_1 = {}", phi_double(x).unwrap());

    for s in [verify_baxter(&b), verify_manin(&b)] {
        println!("{:<8} {}/{} cells pass", s.name, s.passed, s.attempted);
    }
    let (even, odd) = fixed_point_dims(sh).unwrap();
    println!("phi-fixed real form of g: even dim {even}, odd dim {odd}");
}

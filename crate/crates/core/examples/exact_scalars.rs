//! Exact arithmetic in Q(i)[√2, √3, …] and its text grammar.

use superpl::scalar::RadicalScalar;

fn main() {
    let half = RadicalScalar::from_frac(1, 2);
    let z = &(&half + &RadicalScalar::i()) * &RadicalScalar::sqrt(6);
    println!("z        = {z}");
    println!("conj z   = {}", z.conj());
    println!("z * 1/z  = {}", &z * &z.invert().unwrap());
    let back: RadicalScalar = z.to_string().parse().unwrap();
    assert_eq!(back, z);
    println!("parsed back exactly: {back}");

    // sums of two radicals have no single-term inverse
    let two_terms = &RadicalScalar::sqrt(2) + &RadicalScalar::sqrt(3);
    println!("1/(√2+√3) -> {:?}", two_terms.invert().err());
}

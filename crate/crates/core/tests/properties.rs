use proptest::prelude::*;

use superpl::hopf::{double_generators, Gen, SuperPoly};
use superpl::scalar::RadicalScalar;
use superpl::supermatrix::{sp_sl, BlockShape, Parity, SuperMatrix};

fn scalar() -> impl Strategy<Value = RadicalScalar> {
    let part = (-6i64..=6, 1i64..=4);
    (part.clone(), part, prop::sample::select(vec![1u64, 2, 3, 6])).prop_map(|((a, b), (c, d), r)| {
        let g = &RadicalScalar::from_frac(a, b) + &(RadicalScalar::i() * RadicalScalar::from_frac(c, d));
        &g * &RadicalScalar::sqrt(r)
    })
}

fn shape() -> impl Strategy<Value = BlockShape> {
    prop::sample::select(vec![(2, 1), (1, 2), (3, 1)]).prop_map(|(m, n)| BlockShape::new(m, n).unwrap())
}

/// A homogeneous supermatrix with small Gaussian-rational entries.
fn homogeneous(sh: BlockShape, odd: bool, seed: Vec<(i64, i64)>) -> SuperMatrix {
    let mut k = 0;
    SuperMatrix::from_fn(sh, |i, j| {
        k += 1;
        if sh.entry_odd(i, j) != odd {
            return RadicalScalar::zero();
        }
        let (a, b) = seed[k % seed.len()];
        &RadicalScalar::from_int(a) + &(RadicalScalar::i() * RadicalScalar::from_int(b))
    })
}

fn entries() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-3i64..=3, -3i64..=3), 1..12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_ring_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        let s = a.to_string();
        prop_assert_eq!(s.parse::<RadicalScalar>().unwrap(), a);
    }

    #[test]
    fn single_term_inverse(a in scalar()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.invert().unwrap()).is_one());
    }

    #[test]
    fn superbracket_laws(sh in shape(), px: bool, py: bool, pz: bool, ex in entries(), ey in entries(), ez in entries()) {
        let x = homogeneous(sh, px, ex);
        let y = homogeneous(sh, py, ey);
        let z = homogeneous(sh, pz, ez);
        let xy = x.superbracket(&y).unwrap();
        let yx = y.superbracket(&x).unwrap();
        let s = if px && py { RadicalScalar::one() } else { -RadicalScalar::one() };
        prop_assert_eq!(&xy, &yx.scale(&s));
        prop_assert!(xy.supertrace().is_zero());
        // graded Jacobi: (-1)^{|x||z|}[x,[y,z]] + cyclic = 0
        let sgn = |a: bool, b: bool| if a && b { -RadicalScalar::one() } else { RadicalScalar::one() };
        let t1 = x.superbracket(&y.superbracket(&z).unwrap()).unwrap().scale(&sgn(px, pz));
        let t2 = y.superbracket(&z.superbracket(&x).unwrap()).unwrap().scale(&sgn(py, px));
        let t3 = z.superbracket(&x.superbracket(&y).unwrap()).unwrap().scale(&sgn(pz, py));
        prop_assert!(t1.add(&t2).add(&t3).is_zero());
        if !x.is_zero() {
            prop_assert_eq!(x.parity(), Parity::from_odd(px));
        }
    }

    #[test]
    fn supertrace_form_is_supersymmetric(sh in shape(), px: bool, ex in entries(), ey in entries()) {
        let x = homogeneous(sh, px, ex);
        let y = homogeneous(sh, px, ey);
        let s = if px { -RadicalScalar::one() } else { RadicalScalar::one() };
        prop_assert_eq!(sp_sl(&x, &y), &sp_sl(&y, &x) * &s);
    }

    #[test]
    fn polynomials_supercommute(sh in shape(), a in 0usize..64, b in 0usize..64, d in 2u8..=4) {
        let gens: Vec<Gen> = double_generators(sh);
        let (g, h) = (gens[a % gens.len()], gens[b % gens.len()]);
        let p = SuperPoly::gen(g, d);
        let q = SuperPoly::gen(h, d);
        let s = if g.odd() && h.odd() { -RadicalScalar::one() } else { RadicalScalar::one() };
        prop_assert_eq!(&p * &q, (&q * &p).scale(&s));
        if g.odd() {
            prop_assert!((&p * &p).is_zero());
        }
    }
}

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Result;
use crate::linalg::{self, big};
use crate::scalar::{sign, RadicalScalar};
use crate::supermatrix::{BlockShape, DoubleElement, SuperMatrix};

/// `φ(A, B) = (−(−1)^{|B|} B̄^st, −(−1)^{|A|} Ā^st)`.
pub fn phi_double(x: &DoubleElement) -> Result<DoubleElement> {
    let odd = x.parity().bit()?;
    let s = -sign(odd);
    Ok(DoubleElement {
        a: x.b.conj().supertranspose().scale(&s),
        b: x.a.conj().supertranspose().scale(&s),
    })
}

/// `K = diag(1_m, −1_n)`.
pub fn k_matrix(shape: BlockShape) -> SuperMatrix {
    SuperMatrix::from_fn(shape, |i, j| match (i == j, shape.is_odd_index(i)) {
        (false, _) => RadicalScalar::zero(),
        (true, false) => RadicalScalar::one(),
        (true, true) => RadicalScalar::from_int(-1),
    })
}

fn left_k(x: &DoubleElement) -> DoubleElement {
    let k = k_matrix(x.shape());
    DoubleElement {
        a: k.matmul(&x.a),
        b: k.matmul(&x.b),
    }
}

/// `M ↦ Kφ(K⁻¹M)` with `K` acting by left multiplication on both components.
/// `K⁻¹M` leaves the supertraceless part, so `φ` is applied by its entrywise
/// formula with the parity of `M`.
pub fn k_twist(x: &DoubleElement) -> Result<DoubleElement> {
    let odd = x.parity().bit()?;
    let kx = left_k(x);
    let s = -sign(odd);
    let phi = DoubleElement {
        a: kx.b.conj().supertranspose().scale(&s),
        b: kx.a.conj().supertranspose().scale(&s),
    };
    Ok(left_k(&phi))
}

/// The automorphism `(A, B) ↦ (J A J⁻¹, J̄ B J̄⁻¹)`, `J = diag(1_m, i·1_n)`,
/// which conjugates `φ` into the K-twist. `inverse` selects `J ↦ J⁻¹`.
pub fn twist_conjugator(x: &DoubleElement, inverse: bool) -> DoubleElement {
    let sh = x.shape();
    let i = RadicalScalar::i();
    let ad = |m: &SuperMatrix, w: &RadicalScalar| {
        // J = diag(1, w): entries (even, odd) pick up w⁻¹, (odd, even) pick up w
        let winv = w.invert().expect("unit");
        SuperMatrix::from_fn(sh, |r, c| {
            let v = m.get(r, c);
            match (sh.is_odd_index(r), sh.is_odd_index(c)) {
                (false, true) => v * &winv,
                (true, false) => v * w,
                _ => v.clone(),
            }
        })
    };
    let (wa, wb) = if inverse { (-i.clone(), i) } else { (i.clone(), -i) };
    DoubleElement {
        a: ad(&x.a, &wa),
        b: ad(&x.b, &wb),
    }
}

/// Real dimensions of the even and odd `φ`-fixed subspaces of `g`.
pub fn fixed_point_dims(shape: BlockShape) -> Result<(usize, usize)> {
    Ok((fixed_dim(shape, false)?, fixed_dim(shape, true)?))
}

fn fixed_dim(shape: BlockShape, odd: bool) -> Result<usize> {
    let s = shape.size();
    let cells: Vec<(usize, usize)> = (0..s)
        .flat_map(|i| (0..s).map(move |j| (i, j)))
        .filter(|&(i, j)| shape.entry_odd(i, j) == odd)
        .collect();
    // variables: re and im of the coefficient of (E_ij, E_ij) for each cell
    let nvars = 2 * cells.len();
    let images: Vec<DoubleElement> = cells
        .iter()
        .map(|&(i, j)| phi_double(&DoubleElement::diag(&SuperMatrix::unit(shape, i, j))))
        .collect::<Result<_>>()?;
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    let mut push_pair = |re_row: Vec<BigRational>, im_row: Vec<BigRational>| {
        rows.push(re_row);
        rows.push(im_row);
    };
    for side in 0..2 {
        for r in 0..s {
            for c in 0..s {
                // φ(x) − x at (side, r, c) with x = Σ (p_k + i q_k) D_k and
                // φ(x) = Σ (p_k − i q_k) φ(D_k)
                let mut re_row = vec![BigRational::zero(); nvars];
                let mut im_row = vec![BigRational::zero(); nvars];
                for (k, img) in images.iter().enumerate() {
                    let m = if side == 0 { &img.a } else { &img.b };
                    let g = m.get(r, c).as_gaussian().expect("unit images are Gaussian");
                    re_row[2 * k] += big(g.re);
                    im_row[2 * k] += big(g.im);
                    re_row[2 * k + 1] += big(g.im);
                    im_row[2 * k + 1] -= big(g.re);
                    if cells[k] == (r, c) {
                        re_row[2 * k] -= big(1.into());
                        im_row[2 * k + 1] -= big(1.into());
                    }
                }
                push_pair(re_row, im_row);
            }
        }
    }
    // supertrace zero (real and imaginary parts)
    let mut re_row = vec![BigRational::zero(); nvars];
    let mut im_row = vec![BigRational::zero(); nvars];
    for (k, &(i, j)) in cells.iter().enumerate() {
        if i == j {
            let v = big(if shape.is_odd_index(i) { (-1).into() } else { 1.into() });
            re_row[2 * k] = v.clone();
            im_row[2 * k + 1] = v;
        }
    }
    push_pair(re_row, im_row);
    Ok(nvars - linalg::rank(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::double::build_double_basis;

    fn shape(m: usize, n: usize) -> BlockShape {
        BlockShape::new(m, n).unwrap()
    }

    #[test]
    fn anti_hermitian_fixed_point() {
        let sh = shape(2, 1);
        let i = RadicalScalar::i();
        let m = SuperMatrix::e(sh, 1, 1).scale(&i).sub(&SuperMatrix::e(sh, 2, 2).scale(&i));
        let x = DoubleElement::diag(&m);
        assert_eq!(phi_double(&x).unwrap(), x);
    }

    #[test]
    fn graded_square_and_g_stability() {
        let b = build_double_basis(shape(2, 1)).unwrap();
        for s in b.sides() {
            let x = b.get(s);
            let p2 = phi_double(&phi_double(x).unwrap()).unwrap();
            let want = if b.side_odd(s) { x.neg() } else { x.clone() };
            assert_eq!(p2, want);
        }
        for t in &b.big_t {
            let y = phi_double(t).unwrap();
            assert_eq!(y.a, y.b);
        }
    }

    #[test]
    fn fixed_dims() {
        for (m, n) in [(2, 1), (1, 2), (3, 1), (3, 2)] {
            assert_eq!(fixed_point_dims(shape(m, n)).unwrap(), (m * m + n * n - 1, 0));
        }
    }

    #[test]
    fn k_twist_is_parity_sign() {
        let b = build_double_basis(shape(2, 1)).unwrap();
        for s in b.sides() {
            let x = b.get(s);
            let p = phi_double(x).unwrap();
            let want = if b.side_odd(s) { p.neg() } else { p };
            assert_eq!(k_twist(x).unwrap(), want);
            let conj = twist_conjugator(&phi_double(&twist_conjugator(x, true)).unwrap(), false);
            assert_eq!(conj, k_twist(x).unwrap());
        }
    }
}

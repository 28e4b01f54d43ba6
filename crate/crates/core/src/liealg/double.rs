use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{RadicalScalar, Rational};
use crate::supermatrix::{sp_double, BlockShape, DoubleElement, SuperMatrix};

use super::basis::{build_sl_basis, BasisKind, BasisVector, SlBasis};

/// The dual bases `T_i = (v_i, v_i)` of `g` and `t_i` of `b`.
#[derive(Clone, Debug)]
pub struct DoubleBasis {
    pub sl: SlBasis,
    pub big_t: Vec<DoubleElement>,
    pub small_t: Vec<DoubleElement>,
}

/// Index into the combined list `T_1..T_N, t_1..t_N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    T(usize),
    Small(usize),
}

fn opposite(v: &BasisVector) -> SuperMatrix {
    let sh = v.matrix.shape();
    let (s, t) = (v.label.s, v.label.t);
    match v.label.kind {
        BasisKind::ETilde => SuperMatrix::unit(sh, t, s).scale(&RadicalScalar::i()),
        _ => SuperMatrix::unit(sh, t, s),
    }
}

fn t_element(v: &BasisVector) -> DoubleElement {
    let sh = v.matrix.shape();
    let i = RadicalScalar::i();
    let two_i = i.scale_int(2);
    let zero = SuperMatrix::zero(sh);
    let positive = v.label.s < v.label.t;
    match v.label.kind {
        BasisKind::H | BasisKind::HTilde | BasisKind::H0 => DoubleElement {
            a: v.matrix.scale(&i),
            b: v.matrix.scale(&-i),
        },
        BasisKind::E | BasisKind::ETilde if positive => DoubleElement {
            a: opposite(v).scale(&two_i),
            b: zero,
        },
        BasisKind::E | BasisKind::ETilde => DoubleElement {
            a: zero,
            b: opposite(v).scale(&-two_i),
        },
        BasisKind::V if positive => DoubleElement {
            a: opposite(v).scale(&two_i),
            b: zero,
        },
        BasisKind::V => DoubleElement {
            a: zero,
            b: opposite(v).scale(&two_i),
        },
    }
}

pub fn build_double_basis(shape: BlockShape) -> Result<DoubleBasis> {
    let sl = build_sl_basis(shape)?;
    let big_t = sl.vectors.iter().map(|v| DoubleElement::diag(&v.matrix)).collect();
    let small_t = sl.vectors.iter().map(t_element).collect();
    let basis = DoubleBasis { sl, big_t, small_t };
    for (i, x) in basis.big_t.iter().enumerate() {
        for (j, y) in basis.small_t.iter().enumerate() {
            let got = sp_double(x, y);
            let ok = if i == j { got.is_one() } else { got.is_zero() };
            if !ok {
                return Err(Error::DualityValidationFailed {
                    i,
                    j,
                    value: got.to_string(),
                });
            }
        }
    }
    Ok(basis)
}

impl DoubleBasis {
    pub fn shape(&self) -> BlockShape {
        self.sl.shape
    }

    /// `N = (m+n)² − 1`.
    pub fn len(&self) -> usize {
        self.big_t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.big_t.is_empty()
    }

    pub fn odd(&self, i: usize) -> bool {
        self.sl.vectors[i].odd
    }

    pub fn sides(&self) -> impl Iterator<Item = Side> {
        let n = self.len();
        (0..n).map(Side::T).chain((0..n).map(Side::Small))
    }

    pub fn get(&self, s: Side) -> &DoubleElement {
        match s {
            Side::T(i) => &self.big_t[i],
            Side::Small(i) => &self.small_t[i],
        }
    }

    pub fn side_odd(&self, s: Side) -> bool {
        match s {
            Side::T(i) | Side::Small(i) => self.odd(i),
        }
    }

    /// Dual element: `T̂_i = t_i`, `t̂_i = (−1)^{|i|} T_i`.
    pub fn dual(&self, s: Side) -> DoubleElement {
        match s {
            Side::T(i) => self.small_t[i].clone(),
            Side::Small(i) if self.odd(i) => self.big_t[i].neg(),
            Side::Small(i) => self.big_t[i].clone(),
        }
    }

    pub fn label(&self, s: Side) -> String {
        match s {
            Side::T(i) => format!("T[{}]", self.sl.vectors[i].label),
            Side::Small(i) => format!("t[{}]", self.sl.vectors[i].label),
        }
    }

    /// Coordinates `(a, b)` with `x = Σ a_k T_k + Σ b_k t_k`.
    pub fn coords(&self, x: &DoubleElement) -> (Vec<RadicalScalar>, Vec<RadicalScalar>) {
        let a = self.small_t.iter().map(|t| sp_double(x, t)).collect();
        let b = self.big_t.iter().map(|t| sp_double(t, x)).collect();
        (a, b)
    }

    pub fn reconstruct(&self, a: &[RadicalScalar], b: &[RadicalScalar]) -> DoubleElement {
        let mut x = DoubleElement::zero(self.shape());
        for (c, t) in a.iter().zip(&self.big_t).chain(b.iter().zip(&self.small_t)) {
            if !c.is_zero() {
                x = x.add(&t.scale(c));
            }
        }
        x
    }
}

pub fn in_g(x: &DoubleElement) -> bool {
    x.a == x.b
}

/// `A_+ = 0`, `B_− = 0`, `A_0 + B_0 = 0`.
pub fn in_b(x: &DoubleElement) -> bool {
    x.a.upper().is_zero() && x.b.lower().is_zero() && x.a.diagonal().add(&x.b.diagonal()).is_zero()
}

/// `x = g_part + b_part` along `d = g ∔ b`.
pub fn decompose(x: &DoubleElement) -> Result<(DoubleElement, DoubleElement)> {
    if !x.in_double() {
        return Err(Error::NotInDouble(
            x.a.supertrace().to_string(),
            x.b.supertrace().to_string(),
        ));
    }
    let half = Rational::new(1, 2);
    let c0 = x.a.diagonal().add(&x.b.diagonal()).scale(&RadicalScalar::from_rational(half));
    let c = x.a.upper().add(&x.b.lower()).add(&c0);
    let g = DoubleElement::diag(&c);
    let b = x.sub(&g);
    Ok((g, b))
}

/// `R = P_b − P_g`.
pub fn r_operator(x: &DoubleElement) -> Result<DoubleElement> {
    let (g, b) = decompose(x)?;
    Ok(b.sub(&g))
}

/// Decomposition by solving the defining linear system directly; a test
/// oracle for [`decompose`].
pub fn decompose_oracle(x: &DoubleElement) -> Option<(DoubleElement, DoubleElement)> {
    let sh = x.shape();
    let s = sh.size();
    let nn = s * s;
    // unknowns: M (0..nn), A' (nn..2nn), B' (2nn..3nn)
    let nvars = 3 * nn;
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    let mut rhs: Vec<RadicalScalar> = Vec::new();
    let one = BigRational::one;
    let idx = |i: usize, j: usize| i * s + j;
    for i in 0..s {
        for j in 0..s {
            for (off, target) in [(nn, &x.a), (2 * nn, &x.b)] {
                let mut r = vec![BigRational::zero(); nvars];
                r[idx(i, j)] = one();
                r[off + idx(i, j)] = one();
                rows.push(r);
                rhs.push(target.get(i, j).clone());
            }
            let strict = if i < j { Some(nn) } else if i > j { Some(2 * nn) } else { None };
            if let Some(off) = strict {
                let mut r = vec![BigRational::zero(); nvars];
                r[off + idx(i, j)] = one();
                rows.push(r);
                rhs.push(RadicalScalar::zero());
            }
        }
        let mut r = vec![BigRational::zero(); nvars];
        r[nn + idx(i, i)] = one();
        r[2 * nn + idx(i, i)] = one();
        rows.push(r);
        rhs.push(RadicalScalar::zero());
    }
    let mut r = vec![BigRational::zero(); nvars];
    for i in 0..s {
        r[idx(i, i)] = if sh.is_odd_index(i) { -one() } else { one() };
    }
    rows.push(r);
    rhs.push(RadicalScalar::zero());

    let sol = linalg::solve_radical(&rows, &rhs)?;
    let mat = |off: usize| SuperMatrix::from_fn(sh, |i, j| sol[off + idx(i, j)].clone());
    let m = mat(0);
    Some((DoubleElement::diag(&m), DoubleElement { a: mat(nn), b: mat(2 * nn) }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(m: usize, n: usize) -> BlockShape {
        BlockShape::new(m, n).unwrap()
    }

    #[test]
    fn double_basis_is_dual() {
        for (m, n) in [(2, 1), (1, 2), (3, 1), (3, 2)] {
            let b = build_double_basis(shape(m, n)).unwrap();
            assert_eq!(b.len(), (m + n) * (m + n) - 1);
            for s in b.sides() {
                for u in b.sides() {
                    let got = sp_double(b.get(s), &b.dual(u));
                    assert_eq!(got.is_one(), s == u, "{} {}", b.label(s), b.label(u));
                    assert!(s == u || got.is_zero());
                }
            }
        }
    }

    #[test]
    fn displayed_odd_pairing() {
        let b = build_double_basis(shape(2, 1)).unwrap();
        let k = b.sl.vectors.iter().position(|v| v.label.kind == BasisKind::V).unwrap();
        let v = &b.sl.vectors[k].matrix;
        let y = DoubleElement {
            a: SuperMatrix::zero(b.shape()),
            b: v.scale(&RadicalScalar::i().scale_int(2)),
        };
        assert!(sp_double(&b.big_t[k], &y).is_zero());
        assert_eq!(b.dual(Side::Small(k)), b.big_t[k].neg());
    }

    #[test]
    fn decompose_examples() {
        let sh = shape(2, 1);
        let e12 = SuperMatrix::e(sh, 1, 2);
        let x = DoubleElement { a: e12.clone(), b: SuperMatrix::zero(sh) };
        let (g, b) = decompose(&x).unwrap();
        assert_eq!(g, DoubleElement::diag(&e12));
        assert_eq!(b, DoubleElement { a: SuperMatrix::zero(sh), b: e12.neg() });
        assert_eq!(decompose_oracle(&x).unwrap(), (g, b));
        assert_eq!(
            r_operator(&x).unwrap(),
            DoubleElement { a: e12.neg(), b: e12.scale(&RadicalScalar::from_int(-2)) }
        );

        let h = SuperMatrix::e(sh, 1, 1).sub(&SuperMatrix::e(sh, 2, 2));
        let x = DoubleElement { a: h.clone(), b: h.neg() };
        let (g, b) = decompose(&x).unwrap();
        assert!(g.is_zero());
        assert_eq!(b, x);
    }

    #[test]
    fn decompose_matches_oracle_on_basis() {
        let b = build_double_basis(shape(1, 2)).unwrap();
        for s in b.sides() {
            let x = b.get(s);
            let (g, bp) = decompose(x).unwrap();
            assert!(in_g(&g) && in_b(&bp));
            assert_eq!(decompose_oracle(x).unwrap(), (g, bp), "{}", b.label(s));
        }
    }

    #[test]
    fn not_in_double() {
        let sh = shape(2, 1);
        let x = DoubleElement::diag(&SuperMatrix::e(sh, 1, 1));
        assert!(matches!(decompose(&x), Err(Error::NotInDouble(..))));
    }
}

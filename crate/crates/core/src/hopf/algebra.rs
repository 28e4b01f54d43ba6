use rustc_hash::FxHashMap;

use crate::error::Result;
use crate::scalar::{sign, RadicalScalar};
use crate::supermatrix::{BlockShape, DoubleElement, SuperMatrix};

use super::monomial::{generators, Gen, Kind, Monomial};
use super::poly::SuperPoly;
use super::tensor::TensorPoly;

type PolyMatrix = Vec<Vec<SuperPoly>>;

/// The truncated Hopf superalgebra of one shape at one truncation degree,
/// with the antipode tables precomputed.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    shape: BlockShape,
    degree: u8,
    antipode: FxHashMap<Gen, SuperPoly>,
}

fn matmul(a: &PolyMatrix, b: &PolyMatrix, degree: u8) -> PolyMatrix {
    let (r, k, c) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    (0..r)
        .map(|i| {
            (0..c)
                .map(|j| {
                    let mut acc = SuperPoly::zero(degree);
                    for l in 0..k {
                        if !a[i][l].is_zero() && !b[l][j].is_zero() {
                            acc.add_assign(&(&a[i][l] * &b[l][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// `Σ_{k>=1} (−X)^k`, i.e. `(1 + X)^{-1} − 1`, for `X` with no constant terms.
fn neumann_tail(x: &PolyMatrix, degree: u8) -> PolyMatrix {
    let neg: PolyMatrix = x.iter().map(|row| row.iter().map(|p| -p).collect()).collect();
    let mut power = neg.clone();
    let mut sum = neg.clone();
    for _ in 1..degree {
        power = matmul(&power, &neg, degree);
        for (srow, prow) in sum.iter_mut().zip(&power) {
            for (s, p) in srow.iter_mut().zip(prow) {
                s.add_assign(p);
            }
        }
    }
    sum
}

/// `1 / (1 + u)` for `u` without constant term.
fn geometric_inverse(u: &SuperPoly) -> SuperPoly {
    let d = u.degree();
    let neg = -u;
    let mut acc = SuperPoly::one(d);
    let mut power = SuperPoly::one(d);
    for _ in 0..d {
        power = &power * &neg;
        acc.add_assign(&power);
    }
    acc
}

/// Determinant of a matrix of even polynomials, expanding along rows and
/// pruning partial products that vanish under truncation.
fn det(m: &PolyMatrix, degree: u8) -> SuperPoly {
    fn go(m: &PolyMatrix, row: usize, used: &mut Vec<bool>, acc: &SuperPoly, neg: bool, out: &mut SuperPoly) {
        if row == m.len() {
            out.add_scaled(acc, &sign(neg));
            return;
        }
        for col in 0..m.len() {
            if used[col] {
                continue;
            }
            // sign of the permutation: count of unused columns to the left
            let skipped = (0..col).filter(|&c| !used[c]).count();
            let p = &m[row][col];
            if !p.is_zero() {
                let next = acc * p;
                if !next.is_zero() {
                    used[col] = true;
                    go(m, row + 1, used, &next, neg ^ (skipped % 2 == 1), out);
                    used[col] = false;
                }
            }
        }
    }
    let mut out = SuperPoly::zero(degree);
    let mut used = vec![false; m.len()];
    go(m, 0, &mut used, &SuperPoly::one(degree), false, &mut out);
    out
}

/// `(−1)^{(|i|+|j|)|j|}`.
pub fn star_sign(shape: BlockShape, i: usize, j: usize) -> RadicalScalar {
    sign(shape.entry_odd(i, j) && shape.is_odd_index(j))
}

impl HopfAlgebra {
    pub fn new(shape: BlockShape, degree: u8) -> Self {
        let mut antipode = FxHashMap::default();
        for kind in [Kind::Y, Kind::Z, Kind::X] {
            let tail = neumann_tail(&Self::gen_matrix(shape, kind, degree), degree);
            for g in generators(shape, kind) {
                antipode.insert(g, tail[g.i()][g.j()].clone());
            }
        }
        Self {
            shape,
            degree,
            antipode,
        }
    }

    fn gen_matrix(shape: BlockShape, kind: Kind, degree: u8) -> PolyMatrix {
        let s = shape.size();
        (0..s)
            .map(|i| (0..s).map(|j| SuperPoly::gen(Gen::new(shape, kind, i, j), degree)).collect())
            .collect()
    }

    pub fn shape(&self) -> BlockShape {
        self.shape
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn gen(&self, kind: Kind, i: usize, j: usize) -> SuperPoly {
        SuperPoly::gen(Gen::new(self.shape, kind, i, j), self.degree)
    }

    /// `u_ij = δ_ij + y_ij` (and likewise `w_ij` for `z`).
    pub fn u(&self, kind: Kind, i: usize, j: usize) -> SuperPoly {
        SuperPoly::unit_shifted(Gen::new(self.shape, kind, i, j), self.degree)
    }

    pub fn one(&self) -> SuperPoly {
        SuperPoly::one(self.degree)
    }

    pub fn zero(&self) -> SuperPoly {
        SuperPoly::zero(self.degree)
    }

    pub fn coproduct_gen(&self, g: Gen) -> TensorPoly {
        let d = self.degree;
        let one = SuperPoly::one(d);
        let p = SuperPoly::gen(g, d);
        let mut t = TensorPoly::pure(&[&one, &p]).add(&TensorPoly::pure(&[&p, &one]));
        for k in 0..self.shape.size() {
            let a = SuperPoly::gen(Gen::new(self.shape, g.kind(), g.i(), k), d);
            let b = SuperPoly::gen(Gen::new(self.shape, g.kind(), k, g.j()), d);
            t = t.add(&TensorPoly::pure(&[&a, &b]));
        }
        t
    }

    pub fn coproduct_mono(&self, m: &Monomial, cache: &mut FxHashMap<Gen, TensorPoly>) -> TensorPoly {
        let mut acc = TensorPoly::one(2, self.degree);
        for g in m.gens() {
            let dg = cache.entry(g).or_insert_with(|| self.coproduct_gen(g));
            acc = acc.mul(dg);
        }
        acc
    }

    /// Algebra-morphism extension of `Δx_ij = 1⊗x_ij + x_ij⊗1 + Σ x_ik⊗x_kj`.
    pub fn coproduct(&self, f: &SuperPoly) -> TensorPoly {
        let mut cache = FxHashMap::default();
        let mut out = TensorPoly::zero(2, self.degree);
        for (m, c) in f.terms() {
            out = out.add(&self.coproduct_mono(m, &mut cache).scale(c));
        }
        out
    }

    pub fn counit(&self, f: &SuperPoly) -> RadicalScalar {
        f.constant_term()
    }

    /// `S(x_ij) = ((1 + X)^{-1} − 1)_ij`, without the constant.
    pub fn antipode_gen(&self, g: Gen) -> &SuperPoly {
        &self.antipode[&g]
    }

    pub fn antipode(&self, f: &SuperPoly) -> SuperPoly {
        f.substitute(false, |g| self.antipode[&g].with_degree(f.degree()))
    }

    /// `sdet(1 + G) = det(A − B D⁻¹ C) / det(D)` for the generator matrix `G`
    /// of one kind.
    pub fn sdet(&self, kind: Kind) -> SuperPoly {
        let (m, s, d) = (self.shape.m(), self.shape.size(), self.degree);
        let g = Self::gen_matrix(self.shape, kind, d);
        let block = |r0: usize, r1: usize, c0: usize, c1: usize| -> PolyMatrix {
            (r0..r1).map(|i| (c0..c1).map(|j| g[i][j].clone()).collect()).collect()
        };
        let b = block(0, m, m, s);
        let c = block(m, s, 0, m);
        let x11 = block(m, s, m, s);
        let mut dinv = neumann_tail(&x11, d);
        for (k, row) in dinv.iter_mut().enumerate() {
            row[k].add_assign(&SuperPoly::one(d));
        }
        let bdc = matmul(&matmul(&b, &dinv, d), &c, d);
        let mut a = block(0, m, 0, m);
        for (i, row) in a.iter_mut().enumerate() {
            row[i].add_assign(&SuperPoly::one(d));
            for (j, p) in row.iter_mut().enumerate() {
                *p = &*p - &bdc[i][j];
            }
        }
        let mut dm = x11;
        for (k, row) in dm.iter_mut().enumerate() {
            row[k].add_assign(&SuperPoly::one(d));
        }
        let det_d = det(&dm, d);
        let inv = geometric_inverse(&(&det_d - &SuperPoly::one(d)));
        &det(&a, d) * &inv
    }

    /// Image of a generator under the graded `⋆`:
    /// `y_ij ↦ σ_ij S(z_ji)`, `z_ij ↦ σ_ij S(y_ji)`, `x_ij ↦ σ_ij S(x_ji)`.
    pub fn star_gen(&self, g: Gen) -> SuperPoly {
        let partner = match g.kind() {
            Kind::Y => Kind::Z,
            Kind::Z => Kind::Y,
            Kind::X => Kind::X,
        };
        let t = g.transposed().with_kind(partner);
        self.antipode[&t].scale(&star_sign(self.shape, g.i(), g.j()))
    }

    /// Antilinear, order-preserving algebra-morphism extension of `star_gen`.
    pub fn star(&self, f: &SuperPoly) -> SuperPoly {
        f.substitute(true, |g| self.star_gen(g).with_degree(f.degree()))
    }

    /// `⋆ ⊗ ⋆` on a rank-2 tensor; with `koszul`, each term also picks up
    /// `(−1)^{|a||b|}`.
    pub fn star_tensor(&self, t: &TensorPoly, koszul: bool) -> TensorPoly {
        let mut cache: FxHashMap<Monomial, SuperPoly> = FxHashMap::default();
        let mut star_mono = |m: &Monomial| {
            cache
                .entry(*m)
                .or_insert_with(|| self.star(&SuperPoly::monomial(*m, RadicalScalar::one(), self.degree)))
                .clone()
        };
        let mut out = TensorPoly::zero(2, t.degree());
        for (k, c) in t.terms() {
            let neg = koszul && k[0].odd() && k[1].odd();
            let a = star_mono(&k[0]);
            let b = star_mono(&k[1]);
            let c = if neg { -c.conj() } else { c.conj() };
            out = out.add(&TensorPoly::pure(&[&a, &b]).scale(&c));
        }
        out.with_degree(t.degree())
    }

    /// Quotient by `I = (y_ij − z_ij)`: both families become `x`.
    pub fn project_i(&self, f: &SuperPoly) -> SuperPoly {
        f.substitute(false, |g| match g.kind() {
            Kind::X => SuperPoly::gen(g, f.degree()),
            _ => SuperPoly::gen(g.with_kind(Kind::X), f.degree()),
        })
    }

    /// Quotient by `J`: strictly upper `y` and strictly lower `z` vanish and
    /// `z_ii ↦ Σ_{k>=1} (−y_ii)^k`.
    pub fn project_j(&self, f: &SuperPoly) -> SuperPoly {
        let d = f.degree();
        f.substitute(false, |g| match g.kind() {
            Kind::Y if g.i() < g.j() => SuperPoly::zero(d),
            Kind::Z if g.i() > g.j() => SuperPoly::zero(d),
            Kind::Z if g.i() == g.j() => {
                let y = SuperPoly::gen(g.with_kind(Kind::Y), d);
                &geometric_inverse(&y) - &SuperPoly::one(d)
            }
            _ => SuperPoly::gen(g, d),
        })
    }

    /// `δ_(A,B)` on the linear part: `y_ij ↦ A_ij`, `z_ij ↦ B_ij`.
    pub fn pair_linear(&self, x: &DoubleElement, f: &SuperPoly) -> RadicalScalar {
        let mut acc = RadicalScalar::zero();
        for (g, c) in f.linear_part() {
            let v = match g.kind() {
                Kind::Y | Kind::X => x.a.get(g.i(), g.j()),
                Kind::Z => x.b.get(g.i(), g.j()),
            };
            if !v.is_zero() {
                acc += &(v * &c);
            }
        }
        acc
    }

    /// `φ(δ_M)(g) = conj(δ_M(g⋆))` reassembled on the generators.
    pub fn phi_from_star(&self, x: &DoubleElement) -> Result<DoubleElement> {
        x.parity().bit()?;
        let sh = self.shape;
        let entry = |kind| {
            SuperMatrix::from_fn(sh, |i, j| {
                self.pair_linear(x, &self.star_gen(Gen::new(sh, kind, i, j))).conj()
            })
        };
        Ok(DoubleElement {
            a: entry(Kind::Y),
            b: entry(Kind::Z),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{build_double_basis, phi_double};

    fn sh() -> BlockShape {
        BlockShape::new(2, 1).unwrap()
    }

    #[test]
    fn coproduct_examples() {
        let h = HopfAlgebra::new(sh(), 3);
        assert_eq!(h.coproduct(&h.one()), TensorPoly::one(2, 3));
        let f = &h.gen(Kind::Y, 0, 1) * &h.gen(Kind::Y, 1, 0);
        let back = h.coproduct(&f).contract_slot(0, false, |m| if m.is_one() { RadicalScalar::one() } else { RadicalScalar::zero() });
        assert_eq!(back, f);
    }

    #[test]
    fn antipode_y11_degree3() {
        let h = HopfAlgebra::new(sh(), 3);
        let s = h.antipode(&h.gen(Kind::Y, 0, 0));
        let y = |i, j| h.gen(Kind::Y, i, j);
        let quad = &(&(&y(0, 0) * &y(0, 0)) + &(&y(0, 1) * &y(1, 0))) + &(&y(0, 2) * &y(2, 0));
        let lin_quad = &quad - &y(0, 0);
        assert!(s.with_degree(2).eq_mod(&lin_quad.with_degree(2), 2));
        assert!(s.terms().any(|(m, _)| m.degree() == 3));
    }

    #[test]
    fn antipode_axiom_on_generators() {
        let h = HopfAlgebra::new(sh(), 3);
        let s = sh().size();
        for i in 0..s {
            for j in 0..s {
                let mut acc = h.zero();
                for k in 0..s {
                    let su = h.antipode(&h.gen(Kind::Y, k, j));
                    let su = if k == j { &su + &h.one() } else { su };
                    acc.add_assign(&(&h.u(Kind::Y, i, k) * &su));
                }
                let want = if i == j { h.one() } else { h.zero() };
                assert_eq!(acc, want);
            }
        }
    }

    #[test]
    fn sdet_linear_part_and_diagonal() {
        let h = HopfAlgebra::new(sh(), 3);
        let sd = h.sdet(Kind::Y);
        let lin = &(&(&h.one() + &h.gen(Kind::Y, 0, 0)) + &h.gen(Kind::Y, 1, 1)) - &h.gen(Kind::Y, 2, 2);
        assert!(sd.eq_mod(&lin, 1));
        let x = DoubleElement::diag(&SuperMatrix::e(sh(), 3, 3));
        assert_eq!(h.pair_linear(&x, &sd), x.a.supertrace());
    }

    #[test]
    fn star_examples() {
        let h = HopfAlgebra::new(sh(), 1);
        assert_eq!(h.star(&h.gen(Kind::Y, 0, 1)), -&h.gen(Kind::Z, 1, 0));
        let h = HopfAlgebra::new(sh(), 3);
        for g in crate::hopf::monomial::double_generators(sh()) {
            let p = SuperPoly::gen(g, 3);
            let want = if g.odd() { -&p } else { p.clone() };
            assert_eq!(h.star(&h.star(&p)), want, "{g}");
        }
        let p = h.gen(Kind::Y, 0, 0).scale(&RadicalScalar::i());
        assert_eq!(h.star(&p), h.star(&h.gen(Kind::Y, 0, 0)).scale(&-RadicalScalar::i()));
    }

    #[test]
    fn projections() {
        let h = HopfAlgebra::new(sh(), 3);
        let p = &h.gen(Kind::Y, 0, 1) - &h.gen(Kind::Z, 0, 1);
        assert!(h.project_i(&p).is_zero());
        assert!(h.project_j(&h.gen(Kind::Y, 0, 1)).is_zero());
        assert_eq!(h.project_j(&h.gen(Kind::Y, 1, 0)), h.gen(Kind::Y, 1, 0));
        let q = &h.antipode(&h.gen(Kind::Y, 0, 0)) - &h.gen(Kind::Z, 0, 0);
        assert!(h.project_j(&q).is_zero());
        let uw = &h.u(Kind::Y, 0, 0) * &h.u(Kind::Z, 1, 1);
        assert_eq!(h.project_i(&uw), &h.u(Kind::X, 0, 0) * &h.u(Kind::X, 1, 1));
    }

    #[test]
    fn phi_matches_star() {
        let b = build_double_basis(sh()).unwrap();
        let h = HopfAlgebra::new(sh(), 3);
        for s in b.sides() {
            let x = b.get(s);
            assert_eq!(h.phi_from_star(x).unwrap(), phi_double(x).unwrap(), "{}", b.label(s));
        }
    }
}

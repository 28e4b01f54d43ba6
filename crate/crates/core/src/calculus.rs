//! ε-derivations and the invariant superderivations `∇^L`, `∇^R`.

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::hopf::{double_generators, Gen, HopfAlgebra, Kind, Monomial, SuperPoly, TensorPoly};
use crate::liealg::{phi_double, DoubleBasis};
use crate::report::{Cell, SuiteResult, Witness};
use crate::scalar::{sign, RadicalScalar};
use crate::supermatrix::{BlockShape, DoubleElement, Parity, SuperMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hand {
    Left,
    Right,
}

/// `δ_(A,B)`: `y_ij ↦ A_ij`, `z_ij ↦ B_ij`, zero off the linear part.
#[derive(Clone, Debug)]
pub struct EpsDerivation {
    pub matrix: DoubleElement,
    pub odd: bool,
}

impl EpsDerivation {
    pub fn new(matrix: DoubleElement) -> Result<Self> {
        let odd = matrix.parity().bit()?;
        Ok(Self { matrix, odd })
    }
}

pub fn eps_apply(d: &EpsDerivation, f: &SuperPoly) -> RadicalScalar {
    let mut acc = RadicalScalar::zero();
    for (g, c) in f.linear_part() {
        let m = if g.kind() == Kind::Z { &d.matrix.b } else { &d.matrix.a };
        let v = m.get(g.i(), g.j());
        if !v.is_zero() {
            acc += &(v * &c);
        }
    }
    acc
}

/// `∇^{L,R}_M` with its generator images precomputed.
#[derive(Clone, Debug)]
pub struct Nabla {
    hand: Hand,
    odd: bool,
    degree: u8,
    images: FxHashMap<Gen, SuperPoly>,
}

impl Nabla {
    /// Also accepts gl-level `M` (nonzero supertrace), as long as it is
    /// homogeneous.
    pub fn new(hand: Hand, x: &DoubleElement, degree: u8) -> Result<Self> {
        let odd = x.parity().bit()?;
        let sh = x.shape();
        let s = sh.size();
        let mut images = FxHashMap::default();
        for g in double_generators(sh) {
            let m = if g.kind() == Kind::Z { &x.b } else { &x.a };
            let (i, j) = (g.i(), g.j());
            let mut p = SuperPoly::zero(degree);
            for k in 0..s {
                // R: Σ_k M_ik u_kj; L: ± Σ_k u_ik M_kj
                let (c, u) = match hand {
                    Hand::Right => (m.get(i, k), Gen::new(sh, g.kind(), k, j)),
                    Hand::Left => (m.get(k, j), Gen::new(sh, g.kind(), i, k)),
                };
                if !c.is_zero() {
                    p.add_scaled(&SuperPoly::unit_shifted(u, degree), c);
                }
            }
            if hand == Hand::Left && odd && !g.odd() {
                p = -&p;
            }
            images.insert(g, p);
        }
        Ok(Self {
            hand,
            odd,
            degree,
            images,
        })
    }

    pub fn hand(&self) -> Hand {
        self.hand
    }

    pub fn odd(&self) -> bool {
        self.odd
    }

    pub fn image(&self, g: Gen) -> &SuperPoly {
        &self.images[&g]
    }

    /// Super-Leibniz extension to a monomial.
    pub fn apply_mono(&self, m: &Monomial) -> SuperPoly {
        let mut out = SuperPoly::zero(self.degree);
        let len = m.degree();
        for (p, g) in m.gens().enumerate() {
            let prefix = m.slice(0, p);
            let suffix = m.slice(p + 1, len);
            let img = self.images[&g].with_degree(self.degree);
            let term = img.mono_mul_left(&prefix).mono_mul_right(&suffix);
            out.add_scaled(&term, &sign(self.odd && prefix.odd()));
        }
        out
    }

    /// Linear extension; `f` may be inhomogeneous (each component follows its
    /// own generator signs).
    pub fn apply(&self, f: &SuperPoly) -> SuperPoly {
        let f = f.with_degree(self.degree);
        f.map_monomials(|m| self.apply_mono(m))
    }
}

fn homogeneous(f: &SuperPoly) -> Result<()> {
    match f.parity() {
        Parity::Inhomogeneous => Err(Error::InhomogeneousOperand),
        _ => Ok(()),
    }
}

pub fn nabla_r(x: &DoubleElement, f: &SuperPoly) -> Result<SuperPoly> {
    Ok(Nabla::new(Hand::Right, x, f.degree())?.apply(f))
}

pub fn nabla_l(x: &DoubleElement, f: &SuperPoly) -> Result<SuperPoly> {
    homogeneous(f)?;
    Ok(Nabla::new(Hand::Left, x, f.degree())?.apply(f))
}

/// `∇` through the coproduct: `(δ ⊗ id)Δ` or the Koszul-signed `(id ⊗ δ)Δ`.
/// `h` should have truncation one above the target to keep the result exact.
pub fn nabla_oracle(h: &HopfAlgebra, hand: Hand, x: &DoubleElement, f: &SuperPoly) -> Result<SuperPoly> {
    let d = EpsDerivation::new(x.clone())?;
    let delta = h.coproduct(&f.with_degree(h.degree()));
    let pair = |m: &Monomial| {
        if m.degree() == 1 {
            eps_apply(&d, &SuperPoly::monomial(*m, RadicalScalar::one(), h.degree()))
        } else {
            RadicalScalar::zero()
        }
    };
    Ok(match hand {
        Hand::Right => delta.contract_slot(0, d.odd, pair),
        Hand::Left => delta.contract_slot(1, d.odd, pair),
    })
}

/// Applies one `∇` per slot with the Koszul prefactor
/// `(−1)^{|f|(|B|+|C|) + |g||C|}`, then multiplies the slots.
pub fn tensor_eval(ops: &[&Nabla], t: &TensorPoly) -> Result<SuperPoly> {
    if ops.len() != t.rank() {
        return Err(Error::RankMismatch {
            tensor: t.rank(),
            ops: ops.len(),
        });
    }
    let d = t.degree();
    let mut caches: Vec<FxHashMap<Monomial, SuperPoly>> = vec![FxHashMap::default(); ops.len()];
    let mut out = SuperPoly::zero(d);
    for (k, c) in t.terms() {
        let mut neg = false;
        for (slot, op) in ops.iter().enumerate() {
            if op.odd() {
                neg ^= k[..slot].iter().filter(|m| m.odd()).count() % 2 == 1;
            }
        }
        let mut acc = SuperPoly::one(d);
        for (slot, op) in ops.iter().enumerate() {
            let img = caches[slot].entry(k[slot]).or_insert_with(|| op.apply_mono(&k[slot]).with_degree(d));
            acc = &acc * &*img;
            if acc.is_zero() {
                break;
            }
        }
        out.add_scaled(&acc, &if neg { -c } else { c.clone() });
    }
    Ok(out)
}

/// `[∇_A, ∇_B] = ±(−1)^{t|A||B|}∇_{[A,B]}` on generators, with `t` set
/// when the sign flips on odd–odd pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CommutatorLaw {
    pub negative: bool,
    pub odd_twist: bool,
}

impl CommutatorLaw {
    pub fn describe(&self) -> String {
        let s = if self.negative { "-" } else { "+" };
        if self.odd_twist {
            format!("[nabla_A, nabla_B] = {s}(-1)^(|A||B|) nabla_[A,B]")
        } else {
            format!("[nabla_A, nabla_B] = {s}nabla_[A,B]")
        }
    }
}

/// Laws found for each hand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CommutatorSigns {
    pub left: Option<CommutatorLaw>,
    pub right: Option<CommutatorLaw>,
}

fn br(x: &DoubleElement, y: &DoubleElement) -> DoubleElement {
    x.bracket(y).expect("basis elements are homogeneous")
}

fn sample_inputs(h: &HopfAlgebra) -> Vec<(String, SuperPoly)> {
    let sh = h.shape();
    let gens = double_generators(sh);
    let mut v: Vec<(String, SuperPoly)> = gens.iter().map(|&g| (g.to_string(), SuperPoly::gen(g, h.degree()))).collect();
    // quadratic samples: each generator times a fixed even and a fixed odd one
    let even = Gen::y(sh, 0, 0);
    let odd = Gen::z(sh, 0, sh.size() - 1);
    for &g in &gens {
        for q in [even, odd] {
            let p = &SuperPoly::gen(g, h.degree()) * &SuperPoly::gen(q, h.degree());
            if !p.is_zero() {
                v.push((format!("{g}*{q}"), p));
            }
        }
    }
    v
}

/// Representation property, closed form vs coproduct oracle, intertwining
/// with `Δ`, commutator signs and `∇` against `φ`. `h` is the algebra at the
/// target degree `D`; exactness is kept by working at `D + 1` where `∇`
/// lowers degree.
pub fn verify_calculus(b: &DoubleBasis, h: &HopfAlgebra) -> (SuiteResult, CommutatorSigns) {
    let mut out = SuiteResult::new("calculus");
    let sh = b.shape();
    let d = h.degree();
    let hw = HopfAlgebra::new(sh, d + 1);
    let sides: Vec<_> = b.sides().collect();
    let gens = double_generators(sh);

    // [δ_M, δ_N] = δ_[M,N] on generators
    let cells: Vec<Cell> = sides
        .par_iter()
        .flat_map_iter(|&sx| sides.iter().map(move |&sy| (sx, sy)))
        .flat_map_iter(|(sx, sy)| {
            let (x, y) = (b.get(sx), b.get(sy));
            let dx = EpsDerivation::new(x.clone()).expect("homogeneous");
            let dy = EpsDerivation::new(y.clone()).expect("homogeneous");
            let dxy = EpsDerivation::new(br(x, y)).expect("homogeneous");
            let sgn = sign(dx.odd && dy.odd);
            let gens = &gens;
            gens.iter()
                .map(move |&g| {
                    let delta = h.coproduct(&SuperPoly::gen(g, d));
                    let mut lhs = RadicalScalar::zero();
                    for (k, c) in delta.terms() {
                        if k[0].degree() == 1 && k[1].degree() == 1 {
                            let a = SuperPoly::monomial(k[0], RadicalScalar::one(), d);
                            let bb = SuperPoly::monomial(k[1], RadicalScalar::one(), d);
                            let t = &eps_apply(&dx, &a) * &eps_apply(&dy, &bb) - &(&sgn * &(&eps_apply(&dy, &a) * &eps_apply(&dx, &bb)));
                            lhs += &(c * &t);
                        }
                    }
                    let rhs = eps_apply(&dxy, &SuperPoly::gen(g, d));
                    if lhs == rhs {
                        Ok(())
                    } else {
                        Err(Witness::new("[d_M, d_N] = d_[M,N]", vec![b.label(sx), b.label(sy), g.to_string()], &lhs - &rhs))
                    }
                })
                .collect::<Vec<_>>()
        })
        .collect();
    out.record_all(cells);

    let inputs = sample_inputs(&hw);
    let cells: Vec<Cell> = sides
        .par_iter()
        .flat_map_iter(|&s| {
            let x = b.get(s);
            let mut cells = Vec::new();
            for hand in [Hand::Right, Hand::Left] {
                let nab = Nabla::new(hand, x, d + 1).expect("homogeneous");
                for (name, f) in &inputs {
                    let closed = nab.apply(f);
                    let oracle = nabla_oracle(&hw, hand, x, f).expect("homogeneous");
                    let tag = || vec![b.label(s), name.clone()];
                    cells.push(if closed.eq_mod(&oracle, d) {
                        Ok(())
                    } else {
                        Err(Witness::new(format!("{hand:?} closed form = coproduct form"), tag(), &closed - &oracle))
                    });
                    let lhs = hw.coproduct(&closed);
                    let delta = hw.coproduct(f);
                    let rhs = match hand {
                        Hand::Right => delta.map_slot(0, nab.odd(), |m| nab.apply_mono(m)),
                        Hand::Left => delta.map_slot(1, nab.odd(), |m| nab.apply_mono(m)),
                    };
                    cells.push(if lhs.with_degree(d) == rhs.with_degree(d) {
                        Ok(())
                    } else {
                        Err(Witness::new(format!("{hand:?} intertwines with coproduct"), tag(), lhs.sub(&rhs).with_degree(d)))
                    });
                }
            }
            cells
        })
        .collect();
    out.record_all(cells);

    // commutator signs on generators
    let mut signs = CommutatorSigns { left: None, right: None };
    for hand in [Hand::Left, Hand::Right] {
        let ops: Vec<Nabla> = sides.iter().map(|&s| Nabla::new(hand, b.get(s), d).expect("homogeneous")).collect();
        let outcome: Vec<(bool, bool, bool, Option<Witness>)> = (0..sides.len())
            .into_par_iter()
            .flat_map_iter(|i| (0..sides.len()).map(move |j| (i, j)))
            .map(|(i, j)| {
                let (na, nb) = (&ops[i], &ops[j]);
                let nab = Nabla::new(hand, &br(b.get(sides[i]), b.get(sides[j])), d).expect("homogeneous");
                let s = sign(na.odd() && nb.odd());
                let (mut plus, mut minus) = (true, true);
                let mut wit = None;
                for &g in &gens {
                    let p = SuperPoly::gen(g, d);
                    let comm = &na.apply(&nb.apply(&p)) - &nb.apply(&na.apply(&p)).scale(&s);
                    let target = nab.apply(&p);
                    plus &= comm == target;
                    minus &= comm == -&target;
                    if !plus && !minus && wit.is_none() {
                        wit = Some(Witness::new(
                            format!("{hand:?} commutator is +/- nabla of bracket"),
                            vec![b.label(sides[i]), b.label(sides[j]), g.to_string()],
                            &comm - &target,
                        ));
                    }
                }
                (na.odd() && nb.odd(), plus, minus, wit)
            })
            .collect();
        let holds = |law: CommutatorLaw| {
            outcome.iter().all(|(both_odd, p, m, _)| {
                if law.negative ^ (law.odd_twist && *both_odd) {
                    *m
                } else {
                    *p
                }
            })
        };
        let chosen = [(false, false), (true, false), (false, true), (true, true)]
            .into_iter()
            .map(|(negative, odd_twist)| CommutatorLaw { negative, odd_twist })
            .find(|&l| holds(l));
        for (both_odd, p, m, w) in outcome {
            let ok = match chosen {
                Some(l) if l.negative ^ (l.odd_twist && both_odd) => m,
                Some(_) => p,
                None => p || m,
            };
            out.record(if ok && chosen.is_some() {
                Ok(())
            } else {
                Err(w.unwrap_or_else(|| Witness::new(format!("{hand:?} commutator sign law"), vec![], "no uniform law")))
            });
        }
        match hand {
            Hand::Left => signs.left = chosen,
            Hand::Right => signs.right = chosen,
        }
    }
    if let (Some(l), Some(r)) = (signs.left, signs.right) {
        out.check(l.negative != r.negative && l.odd_twist == r.odd_twist, || {
            Witness::new("left and right commutator laws differ by a sign", vec![], format!("left: {}, right: {}", l.describe(), r.describe()))
        });
    }

    // ∇_M(f⋆) = (∇_{φ(M)} f)⋆ on generators, both hands
    let cells: Vec<Cell> = sides
        .par_iter()
        .flat_map_iter(|&s| {
            let x = b.get(s);
            let px = phi_double(x).expect("homogeneous");
            let mut cells = Vec::new();
            for hand in [Hand::Right, Hand::Left] {
                let n = Nabla::new(hand, x, d + 1).expect("homogeneous");
                let np = Nabla::new(hand, &px, d + 1).expect("homogeneous");
                for &g in &gens {
                    let f = SuperPoly::gen(g, d + 1);
                    let lhs = n.apply(&hw.star(&f));
                    let rhs = hw.star(&np.apply(&f));
                    cells.push(if lhs.eq_mod(&rhs, d) {
                        Ok(())
                    } else {
                        Err(Witness::new(
                            format!("{hand:?}: nabla_M(f*) = (nabla_phi(M) f)*"),
                            vec![b.label(s), g.to_string()],
                            (&lhs - &rhs).with_degree(d),
                        ))
                    });
                }
            }
            cells
        })
        .collect();
    out.record_all(cells);
    (out, signs)
}

/// `E_st` of `gl(m|n)` as a double element `(E_st, E_st)`.
pub fn gl_unit(shape: BlockShape, s: usize, t: usize) -> DoubleElement {
    DoubleElement::diag(&SuperMatrix::unit(shape, s, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::HopfAlgebra;
    use crate::liealg::build_double_basis;

    fn sh() -> BlockShape {
        BlockShape::new(2, 1).unwrap()
    }

    #[test]
    fn eps_examples() {
        let x = DoubleElement::diag(&SuperMatrix::e(sh(), 1, 2).scale(&RadicalScalar::from_int(5)));
        let d = EpsDerivation::new(x).unwrap();
        let h = HopfAlgebra::new(sh(), 3);
        assert_eq!(eps_apply(&d, &h.gen(Kind::Y, 0, 1)), RadicalScalar::from_int(5));
        assert!(eps_apply(&d, &(&h.gen(Kind::Y, 0, 1) * &h.gen(Kind::Y, 1, 0))).is_zero());
        let m = SuperMatrix::e(sh(), 1, 1).add(&SuperMatrix::e(sh(), 3, 3).scale(&RadicalScalar::from_int(4)));
        let d = EpsDerivation::new(DoubleElement::diag(&m)).unwrap();
        let sd = &h.sdet(Kind::Y) - &h.one();
        assert_eq!(eps_apply(&d, &sd), m.supertrace());
    }

    #[test]
    fn nabla_r_generator() {
        let h = HopfAlgebra::new(sh(), 3);
        let a = SuperMatrix::from_fn(sh(), |i, j| {
            if sh().entry_odd(i, j) {
                RadicalScalar::zero()
            } else {
                RadicalScalar::from_int((3 * i + j + 1) as i64)
            }
        });
        let x = DoubleElement::diag(&a);
        let got = nabla_r(&x, &h.u(Kind::Y, 0, 1)).unwrap();
        let mut want = h.zero();
        for k in 0..3 {
            want.add_scaled(&h.u(Kind::Y, k, 1), a.get(0, k));
        }
        assert_eq!(got, want);
        assert!(nabla_r(&x, &h.one()).unwrap().is_zero());
        assert!(nabla_l(&x, &h.one()).unwrap().is_zero());
    }

    #[test]
    fn nabla_l_rejects_inhomogeneous() {
        let h = HopfAlgebra::new(sh(), 3);
        let f = &h.gen(Kind::Y, 0, 0) + &h.gen(Kind::Y, 0, 2);
        let x = DoubleElement::diag(&SuperMatrix::e(sh(), 1, 2));
        assert_eq!(nabla_l(&x, &f), Err(Error::InhomogeneousOperand));
    }

    #[test]
    fn tensor_eval_rules() {
        let h = HopfAlgebra::new(sh(), 3);
        let x = DoubleElement::diag(&SuperMatrix::e(sh(), 1, 3));
        let n = Nabla::new(Hand::Right, &x, 3).unwrap();
        let one = h.one();
        let t = TensorPoly::pure(&[&one, &one, &one]);
        assert!(tensor_eval(&[&n, &n, &n], &t).unwrap().is_zero());
        assert!(matches!(tensor_eval(&[&n, &n], &t), Err(Error::RankMismatch { .. })));
        // odd middle operator after an odd first slot picks up a sign
        let y13 = h.gen(Kind::Y, 0, 2);
        let y31 = h.gen(Kind::Y, 2, 0);
        let e = DoubleElement::diag(&SuperMatrix::e(sh(), 1, 1));
        let ne = Nabla::new(Hand::Right, &e, 3).unwrap();
        let t = TensorPoly::pure(&[&y13, &y31, &one]);
        let got = tensor_eval(&[&ne, &n, &ne], &t).unwrap();
        let ne_u = &ne.apply(&one);
        assert!(ne_u.is_zero());
        assert!(got.is_zero());
        let t = TensorPoly::pure(&[&y13, &y31, &h.gen(Kind::Y, 0, 0)]);
        let got = tensor_eval(&[&ne, &n, &ne], &t).unwrap();
        let want = -&(&(&ne.apply(&y13) * &n.apply(&y31)) * &ne.apply(&h.gen(Kind::Y, 0, 0)));
        assert_eq!(got, want);
    }

    #[test]
    fn calculus_suite_small() {
        for (m, n) in [(2, 1), (1, 2)] {
            let b = build_double_basis(BlockShape::new(m, n).unwrap()).unwrap();
            let h = HopfAlgebra::new(b.shape(), 3);
            let (r, signs) = verify_calculus(&b, &h);
            assert!(r.ok(), "{:?}", r.witness);
            assert_eq!(signs.left, Some(CommutatorLaw { negative: false, odd_twist: true }));
            assert_eq!(signs.right, Some(CommutatorLaw { negative: true, odd_twist: true }));
        }
    }
}


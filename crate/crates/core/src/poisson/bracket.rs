use crate::calculus::{Hand, Nabla};
use crate::error::{Error, Result};
use crate::hopf::SuperPoly;
use crate::liealg::{r_operator, DoubleBasis};
use crate::report::{SuiteResult, Witness};
use crate::scalar::{sign, RadicalScalar};
use crate::supermatrix::{sp_double, DoubleElement, Parity, SuperMatrix};

/// A dual pair `(h_a, ĥ_a)` of the double with `r^{ab} = ½(R ĥ_a, ĥ_b)`;
/// only nonzero entries are stored.
#[derive(Clone, Debug)]
pub struct RMatrixTable {
    pub labels: Vec<String>,
    pub elements: Vec<DoubleElement>,
    pub duals: Vec<DoubleElement>,
    pub odd: Vec<bool>,
    pub entries: Vec<(usize, usize, RadicalScalar)>,
}

impl RMatrixTable {
    pub fn from_system(labels: Vec<String>, elements: Vec<DoubleElement>, duals: Vec<DoubleElement>) -> Result<Self> {
        let half = RadicalScalar::from_frac(1, 2);
        let odd = elements.iter().map(|e| e.parity().bit()).collect::<Result<Vec<_>>>()?;
        let rd = duals.iter().map(r_operator).collect::<Result<Vec<_>>>()?;
        let mut entries = Vec::new();
        for (a, ra) in rd.iter().enumerate() {
            for (b, hb) in duals.iter().enumerate() {
                let v = &sp_double(ra, hb) * &half;
                if !v.is_zero() {
                    entries.push((a, b, v));
                }
            }
        }
        Ok(Self {
            labels,
            elements,
            duals,
            odd,
            entries,
        })
    }

    /// `h = (T_1..T_N, t_1..t_N)`, `ĥ = (t_1..t_N, (−1)^{|i|}T_i)`.
    pub fn standard(b: &DoubleBasis) -> Result<Self> {
        let mut labels = Vec::new();
        let mut elements = Vec::new();
        let mut duals = Vec::new();
        for s in b.sides() {
            labels.push(b.label(s));
            elements.push(b.get(s).clone());
            duals.push(b.dual(s));
        }
        Self::from_system(labels, elements, duals)
    }

    /// `e = (v_i, 0), (0, v_i)` with duals `(v̂_i, 0), (0, −v̂_i)`.
    pub fn split(b: &DoubleBasis) -> Result<Self> {
        let sh = b.shape();
        let zero = SuperMatrix::zero(sh);
        let sl = &b.sl;
        let mut labels = Vec::new();
        let mut elements = Vec::new();
        let mut duals = Vec::new();
        for (v, d) in sl.vectors.iter().zip(&sl.duals) {
            labels.push(format!("({},0)", v.label));
            elements.push(DoubleElement::new(v.matrix.clone(), zero.clone())?);
            duals.push(DoubleElement::new(d.clone(), zero.clone())?);
        }
        for (v, d) in sl.vectors.iter().zip(&sl.duals) {
            labels.push(format!("(0,{})", v.label));
            elements.push(DoubleElement::new(zero.clone(), v.matrix.clone())?);
            duals.push(DoubleElement::new(zero.clone(), d.neg())?);
        }
        Self::from_system(labels, elements, duals)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `(h_a, ĥ_b) = δ_ab`, and `r^{ab} = 0` unless `|h_a| = |h_b|`.
    pub fn validate(&self, name: &str) -> SuiteResult {
        let mut out = SuiteResult::new(format!("r-matrix[{name}]"));
        for (a, h) in self.elements.iter().enumerate() {
            for (b, d) in self.duals.iter().enumerate() {
                let v = sp_double(h, d);
                let want = if a == b { RadicalScalar::one() } else { RadicalScalar::zero() };
                out.check(v == want, || {
                    Witness::new("(h_a, dual h_b) = delta_ab", vec![self.labels[a].clone(), self.labels[b].clone()], &v - &want)
                });
            }
        }
        for (a, b, v) in &self.entries {
            out.check(self.odd[*a] == self.odd[*b], || {
                Witness::new("r^ab vanishes across parities", vec![self.labels[*a].clone(), self.labels[*b].clone()], v)
            });
        }
        out
    }
}

/// Poisson superbracket `Σ c_ab (−1)^{|f||a|}(∇^L_a f ∇^L_b g − ∇^R_a f ∇^R_b g)`
/// with its derivations precomputed at one truncation.
#[derive(Clone, Debug)]
pub struct Bracket {
    degree: u8,
    odd: Vec<bool>,
    left: Vec<Nabla>,
    right: Vec<Nabla>,
    pairs: Vec<(usize, usize, RadicalScalar)>,
}

impl Bracket {
    fn build(elements: &[DoubleElement], pairs: Vec<(usize, usize, RadicalScalar)>, degree: u8) -> Result<Self> {
        let mut odd = Vec::new();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for e in elements {
            let l = Nabla::new(Hand::Left, e, degree)?;
            odd.push(l.odd());
            left.push(l);
            right.push(Nabla::new(Hand::Right, e, degree)?);
        }
        Ok(Self {
            degree,
            odd,
            left,
            right,
            pairs,
        })
    }

    /// The single-index form over `(T_i, t_i)`.
    pub fn sum(b: &DoubleBasis, degree: u8) -> Result<Self> {
        let elements: Vec<DoubleElement> = b.sides().map(|s| b.get(s).clone()).collect();
        let n = b.len();
        let pairs = (0..n).map(|i| (i, n + i, RadicalScalar::one())).collect();
        Self::build(&elements, pairs, degree)
    }

    /// The double-index form over a whole dual system.
    pub fn general(table: &RMatrixTable, degree: u8) -> Result<Self> {
        Self::build(&table.elements, table.entries.clone(), degree)
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn apply(&self, f: &SuperPoly, g: &SuperPoly) -> Result<SuperPoly> {
        if f.degree() != self.degree {
            return Err(Error::TruncationMismatch(f.degree(), self.degree));
        }
        if g.degree() != self.degree {
            return Err(Error::TruncationMismatch(g.degree(), self.degree));
        }
        let pf = match (f.parity(), g.parity()) {
            (Parity::Inhomogeneous, _) | (_, Parity::Inhomogeneous) => return Err(Error::InhomogeneousOperand),
            (p, _) => p == Parity::Odd,
        };
        let n = self.odd.len();
        let mut lf: Vec<Option<(SuperPoly, SuperPoly)>> = vec![None; n];
        let mut lg: Vec<Option<(SuperPoly, SuperPoly)>> = vec![None; n];
        let mut out = SuperPoly::zero(self.degree);
        for (a, b, c) in &self.pairs {
            let (fl, fr) = lf[*a].get_or_insert_with(|| (self.left[*a].apply(f), self.right[*a].apply(f)));
            if fl.is_zero() && fr.is_zero() {
                continue;
            }
            let (gl, gr) = lg[*b].get_or_insert_with(|| (self.left[*b].apply(g), self.right[*b].apply(g)));
            let term = &(&*fl * &*gl) - &(&*fr * &*gr);
            out.add_scaled(&term, &(c * &sign(pf && self.odd[*a])));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{HopfAlgebra, Kind};
    use crate::liealg::build_double_basis;
    use crate::supermatrix::BlockShape;

    fn setup() -> (DoubleBasis, HopfAlgebra) {
        let sh = BlockShape::new(2, 1).unwrap();
        (build_double_basis(sh).unwrap(), HopfAlgebra::new(sh, 3))
    }

    #[test]
    fn tables_validate() {
        let (b, _) = setup();
        for t in [RMatrixTable::standard(&b).unwrap(), RMatrixTable::split(&b).unwrap()] {
            assert_eq!(t.len(), 16);
            let r = t.validate("x");
            assert!(r.ok(), "{:?}", r.witness);
        }
    }

    #[test]
    fn trivial_brackets() {
        let (b, h) = setup();
        let br = Bracket::sum(&b, 3).unwrap();
        let u11 = h.u(Kind::Y, 0, 0);
        assert!(br.apply(&h.one(), &u11).unwrap().is_zero());
        assert!(br.apply(&u11, &u11).unwrap().is_zero());
        let mixed = &h.gen(Kind::Y, 0, 0) + &h.gen(Kind::Y, 0, 2);
        assert_eq!(br.apply(&mixed, &u11), Err(Error::InhomogeneousOperand));
        assert_eq!(br.apply(&SuperPoly::one(2), &u11), Err(Error::TruncationMismatch(2, 3)));
    }

    #[test]
    fn u12_u21_snapshot() {
        let (b, h) = setup();
        let sum = Bracket::sum(&b, 3).unwrap();
        let gen = Bracket::general(&RMatrixTable::standard(&b).unwrap(), 3).unwrap();
        let (u12, u21) = (h.u(Kind::Y, 0, 1), h.u(Kind::Y, 1, 0));
        let s = sum.apply(&u12, &u21).unwrap();
        assert_eq!(s, gen.apply(&u12, &u21).unwrap());
        assert!(s.is_zero());
        let (u11, w12) = (h.u(Kind::Y, 0, 0), h.u(Kind::Z, 0, 1));
        let s = sum.apply(&u11, &w12).unwrap();
        assert_eq!(s, gen.apply(&u11, &w12).unwrap());
        assert_eq!(s.to_string(), U11_W12);
    }

    const U11_W12: &str = "0/1+-2/1i * y[1,2] + 0/1+1/1i * z[1,2] + 0/1+1/1i * y[1,1]*z[1,2] + 0/1+-2/1i * y[1,2]*z[1,1]";
}

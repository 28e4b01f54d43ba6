//! Supermatrices over [`RadicalScalar`] with an `(m|n)` block grading, and
//! pairs of them representing elements of the double `sl ⊕ sl`.
//!
//! Indices are 0-based in code. Index `i` is odd when `i >= m`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::RadicalScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BlockShape {
    m: usize,
    n: usize,
}

impl BlockShape {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidShape { m, n });
        }
        if m == n {
            return Err(Error::EqualDimensions(m));
        }
        if m + n > 15 {
            return Err(Error::Config(format!("m + n = {} exceeds 15", m + n)));
        }
        Ok(Self { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `m + n`.
    pub fn size(&self) -> usize {
        self.m + self.n
    }

    /// `(m+n)² − 1`, the dimension of `sl(m|n)`.
    pub fn sl_dim(&self) -> usize {
        self.size() * self.size() - 1
    }

    pub fn is_odd_index(&self, i: usize) -> bool {
        i >= self.m
    }

    /// Parity of the matrix unit `E_ij`.
    pub fn entry_odd(&self, i: usize, j: usize) -> bool {
        self.is_odd_index(i) != self.is_odd_index(j)
    }
}

impl fmt::Display for BlockShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.m, self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Parity {
    Even,
    Odd,
    Inhomogeneous,
}

impl Parity {
    pub fn from_odd(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// `true` for odd, `false` for even, error otherwise.
    pub fn bit(self) -> Result<bool> {
        match self {
            Parity::Even => Ok(false),
            Parity::Odd => Ok(true),
            Parity::Inhomogeneous => Err(Error::InhomogeneousOperand),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperMatrix {
    shape: BlockShape,
    entries: Vec<RadicalScalar>,
}

impl SuperMatrix {
    pub fn zero(shape: BlockShape) -> Self {
        let n = shape.size();
        Self {
            shape,
            entries: vec![RadicalScalar::zero(); n * n],
        }
    }

    pub fn identity(shape: BlockShape) -> Self {
        let mut out = Self::zero(shape);
        for i in 0..shape.size() {
            out.set(i, i, RadicalScalar::one());
        }
        out
    }

    /// Matrix unit with a single `1` at `(s, t)` (0-based).
    pub fn unit(shape: BlockShape, s: usize, t: usize) -> Self {
        let mut out = Self::zero(shape);
        out.set(s, t, RadicalScalar::one());
        out
    }

    /// Matrix unit `E_st` with 1-based indices.
    pub fn e(shape: BlockShape, s: usize, t: usize) -> Self {
        Self::unit(shape, s - 1, t - 1)
    }

    /// Builds from a closure over 0-based indices.
    pub fn from_fn(shape: BlockShape, mut f: impl FnMut(usize, usize) -> RadicalScalar) -> Self {
        let n = shape.size();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { shape, entries }
    }

    pub fn shape(&self) -> BlockShape {
        self.shape
    }

    pub fn get(&self, i: usize, j: usize) -> &RadicalScalar {
        &self.entries[i * self.shape.size() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RadicalScalar) {
        let n = self.shape.size();
        self.entries[i * n + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RadicalScalar::is_zero)
    }

    /// Nonzero entries as `(i, j, value)`.
    pub fn support(&self) -> impl Iterator<Item = (usize, usize, &RadicalScalar)> + '_ {
        let n = self.shape.size();
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / n, k % n, v))
    }

    /// Parity recomputed from the entry support; the zero matrix is even.
    pub fn parity(&self) -> Parity {
        let (mut even, mut odd) = (false, false);
        for (i, j, _) in self.support() {
            if self.shape.entry_odd(i, j) {
                odd = true;
            } else {
                even = true;
            }
        }
        match (even, odd) {
            (_, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (true, true) => Parity::Inhomogeneous,
        }
    }

    /// Checks a declared parity tag against the support.
    pub fn validate_parity(&self, declared: Parity) -> Result<()> {
        let actual = self.parity();
        let ok = actual == declared || (self.is_zero() && declared != Parity::Inhomogeneous);
        if ok {
            Ok(())
        } else {
            Err(Error::ParityMismatch)
        }
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.shape == other.shape {
            Ok(())
        } else {
            Err(Error::ShapeMismatch)
        }
    }

    pub fn supertrace(&self) -> RadicalScalar {
        let mut acc = RadicalScalar::zero();
        for i in 0..self.shape.size() {
            if self.shape.is_odd_index(i) {
                acc -= self.get(i, i);
            } else {
                acc += self.get(i, i);
            }
        }
        acc
    }

    pub fn trace(&self) -> RadicalScalar {
        (0..self.shape.size()).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.shape, other.shape);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Self {
            shape: self.shape,
            entries,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.shape, other.shape);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Self {
            shape: self.shape,
            entries,
        }
    }

    pub fn scale(&self, c: &RadicalScalar) -> Self {
        Self {
            shape: self.shape,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            shape: self.shape,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.shape, other.shape);
        let n = self.shape.size();
        let mut out = Self::zero(self.shape);
        for (i, k, a) in self.support() {
            for j in 0..n {
                let b = other.get(k, j);
                if !b.is_zero() {
                    let cell = &mut out.entries[i * n + j];
                    *cell += a * b;
                }
            }
        }
        out
    }

    /// `MN − (−1)^{|M||N|} NM`.
    pub fn superbracket(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let sign_odd = self.parity().bit()? && other.parity().bit()?;
        let mn = self.matmul(other);
        let nm = other.matmul(self);
        Ok(if sign_odd { mn.add(&nm) } else { mn.sub(&nm) })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.shape, |i, j| self.get(j, i).clone())
    }

    /// `(P Q; R T) ↦ (Pᵗ Rᵗ; −Qᵗ Tᵗ)`.
    pub fn supertranspose(&self) -> Self {
        let sh = self.shape;
        Self::from_fn(sh, |i, j| {
            let v = self.get(j, i);
            // entry (i, j) of the result comes from Q when i is odd and j even
            if sh.is_odd_index(i) && !sh.is_odd_index(j) {
                -v
            } else {
                v.clone()
            }
        })
    }

    pub fn conj(&self) -> Self {
        Self {
            shape: self.shape,
            entries: self.entries.iter().map(RadicalScalar::conj).collect(),
        }
    }

    /// Strictly upper triangular part.
    pub fn upper(&self) -> Self {
        Self::from_fn(self.shape, |i, j| if i < j { self.get(i, j).clone() } else { RadicalScalar::zero() })
    }

    /// Strictly lower triangular part.
    pub fn lower(&self) -> Self {
        Self::from_fn(self.shape, |i, j| if i > j { self.get(i, j).clone() } else { RadicalScalar::zero() })
    }

    pub fn diagonal(&self) -> Self {
        Self::from_fn(self.shape, |i, j| if i == j { self.get(i, j).clone() } else { RadicalScalar::zero() })
    }

    /// Rows of scalar strings, for JSON output.
    pub fn to_rows(&self) -> Vec<Vec<String>> {
        let n = self.shape.size();
        (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_rows()).expect("string grid serializes")
    }
}

impl fmt::Display for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .support()
            .map(|(i, j, v)| format!("({v})*E[{},{}]", i + 1, j + 1))
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// `−(i/2)·Str(MN)`.
pub fn sp_sl(m: &SuperMatrix, n: &SuperMatrix) -> RadicalScalar {
    let half_i = RadicalScalar::i().scale_rational(crate::scalar::Rational::new(-1, 2));
    m.matmul(n).supertrace() * half_i
}

/// An element `(A, B)` of the double.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DoubleElement {
    pub a: SuperMatrix,
    pub b: SuperMatrix,
}

impl DoubleElement {
    pub fn new(a: SuperMatrix, b: SuperMatrix) -> Result<Self> {
        a.check_shape(&b)?;
        Ok(Self { a, b })
    }

    pub fn zero(shape: BlockShape) -> Self {
        Self {
            a: SuperMatrix::zero(shape),
            b: SuperMatrix::zero(shape),
        }
    }

    /// `(M, M)`.
    pub fn diag(m: &SuperMatrix) -> Self {
        Self {
            a: m.clone(),
            b: m.clone(),
        }
    }

    pub fn shape(&self) -> BlockShape {
        self.a.shape()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn parity(&self) -> Parity {
        match (self.a.parity(), self.b.parity()) {
            (p, q) if p == q => p,
            (p, _) if self.b.is_zero() => p,
            (_, q) if self.a.is_zero() => q,
            _ => Parity::Inhomogeneous,
        }
    }

    /// Both supertraces vanish.
    pub fn in_double(&self) -> bool {
        self.a.supertrace().is_zero() && self.b.supertrace().is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            a: self.a.add(&o.a),
            b: self.b.add(&o.b),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self {
            a: self.a.sub(&o.a),
            b: self.b.sub(&o.b),
        }
    }

    pub fn scale(&self, c: &RadicalScalar) -> Self {
        Self {
            a: self.a.scale(c),
            b: self.b.scale(c),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            a: self.a.neg(),
            b: self.b.neg(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            a: self.a.conj(),
            b: self.b.conj(),
        }
    }

    /// Componentwise superbracket.
    pub fn bracket(&self, o: &Self) -> Result<Self> {
        let p = self.parity().bit()?;
        let q = o.parity().bit()?;
        let sign_odd = p && q;
        let br = |x: &SuperMatrix, y: &SuperMatrix| {
            let xy = x.matmul(y);
            let yx = y.matmul(x);
            if sign_odd {
                xy.add(&yx)
            } else {
                xy.sub(&yx)
            }
        };
        Ok(Self {
            a: br(&self.a, &o.a),
            b: br(&self.b, &o.b),
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "A": self.a.to_json(), "B": self.b.to_json() })
    }
}

impl fmt::Display for DoubleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// `sp_sl(A, C) − sp_sl(B, D)`.
pub fn sp_double(x: &DoubleElement, y: &DoubleElement) -> RadicalScalar {
    sp_sl(&x.a, &y.a) - sp_sl(&x.b, &y.b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn sh21() -> BlockShape {
        BlockShape::new(2, 1).unwrap()
    }

    fn e(s: usize, t: usize) -> SuperMatrix {
        SuperMatrix::e(sh21(), s, t)
    }

    #[test]
    fn shape_rules() {
        assert!(matches!(BlockShape::new(2, 2), Err(Error::EqualDimensions(2))));
        assert!(matches!(BlockShape::new(0, 1), Err(Error::InvalidShape { .. })));
        let s = sh21();
        assert!(!s.is_odd_index(1) && s.is_odd_index(2));
        assert_eq!(s.sl_dim(), 8);
    }

    #[test]
    fn supertrace_examples() {
        assert_eq!(SuperMatrix::identity(sh21()).supertrace(), RadicalScalar::one());
        assert_eq!(e(1, 1).supertrace(), RadicalScalar::one());
        assert_eq!(e(3, 3).supertrace(), RadicalScalar::from_int(-1));
        assert_eq!(e(1, 3).matmul(&e(3, 1)), e(1, 1));
        assert_eq!(e(1, 3).matmul(&e(3, 1)).supertrace(), RadicalScalar::one());
    }

    #[test]
    fn superbracket_examples() {
        assert_eq!(e(1, 2).superbracket(&e(2, 1)).unwrap(), e(1, 1).sub(&e(2, 2)));
        assert_eq!(e(1, 3).superbracket(&e(3, 1)).unwrap(), e(1, 1).add(&e(3, 3)));
        let m = e(1, 2).add(&e(2, 2));
        assert!(m.superbracket(&m).unwrap().is_zero());
        let mixed = e(1, 2).add(&e(1, 3));
        assert_eq!(mixed.parity(), Parity::Inhomogeneous);
        assert_eq!(mixed.superbracket(&e(1, 1)), Err(Error::InhomogeneousOperand));
    }

    #[test]
    fn supertranspose_examples() {
        assert_eq!(e(1, 2).supertranspose(), e(2, 1));
        assert_eq!(e(1, 3).supertranspose(), e(3, 1).neg());
        assert_eq!(e(3, 1).supertranspose(), e(1, 3));
        // twice: off-diagonal blocks flip sign
        assert_eq!(e(1, 3).supertranspose().supertranspose(), e(1, 3).neg());
        assert_eq!(e(1, 2).supertranspose().supertranspose(), e(1, 2));
    }

    #[test]
    fn sp_sl_examples() {
        let two_i = RadicalScalar::i().scale_int(2);
        assert_eq!(sp_sl(&e(1, 2), &e(2, 1).scale(&two_i)), RadicalScalar::one());
        assert!(sp_sl(&e(1, 2), &e(1, 2)).is_zero());
        let h1 = e(1, 1)
            .sub(&e(2, 2))
            .scale(&RadicalScalar::sqrt(2).scale_rational(Rational::new(1, 2)));
        assert_eq!(sp_sl(&h1, &h1), RadicalScalar::i().scale_rational(Rational::new(-1, 2)));
    }

    #[test]
    fn sp_double_examples() {
        let two_i = RadicalScalar::i().scale_int(2);
        let z = SuperMatrix::zero(sh21());
        let v = DoubleElement::diag(&e(1, 3));
        let dual = DoubleElement::new(e(3, 1).scale(&two_i), z.clone()).unwrap();
        assert_eq!(sp_double(&v, &dual), RadicalScalar::one());
        let other = DoubleElement::new(z.clone(), e(1, 3).scale(&two_i)).unwrap();
        assert!(sp_double(&v, &other).is_zero());
        let m = DoubleElement::diag(&e(1, 2).add(&e(3, 3)));
        let n = DoubleElement::diag(&e(2, 1).sub(&e(1, 1)));
        assert!(sp_double(&m, &n).is_zero());
        let x = DoubleElement::new(e(1, 2), z.clone()).unwrap();
        let y = DoubleElement::new(z, e(2, 1)).unwrap();
        assert!(sp_double(&x, &y).is_zero());
    }

    #[test]
    fn parity_validation() {
        assert!(e(1, 3).validate_parity(Parity::Odd).is_ok());
        assert_eq!(e(1, 3).validate_parity(Parity::Even), Err(Error::ParityMismatch));
        assert!(SuperMatrix::zero(sh21()).validate_parity(Parity::Odd).is_ok());
    }
}

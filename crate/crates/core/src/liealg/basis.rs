use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{RadicalScalar, Rational};
use crate::supermatrix::{sp_sl, BlockShape, SuperMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    E,
    ETilde,
    V,
    H,
    HTilde,
    H0,
}

/// Root vectors carry their matrix position `(s, t)` (0-based; `s > t` for
/// negative roots). Cartan vectors carry their index `k` in `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisLabel {
    pub kind: BasisKind,
    pub s: usize,
    pub t: usize,
}

/// Position of a basis vector in the triangular decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Triangle {
    Plus,
    Zero,
    Minus,
}

impl BasisLabel {
    pub fn triangle(&self) -> Triangle {
        match self.kind {
            BasisKind::H | BasisKind::HTilde | BasisKind::H0 => Triangle::Zero,
            _ if self.s < self.t => Triangle::Plus,
            _ => Triangle::Minus,
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (s, t) = (self.s + 1, self.t + 1);
        match self.kind {
            BasisKind::E => write!(f, "E({s},{t})"),
            BasisKind::ETilde => write!(f, "Et({s},{t})"),
            BasisKind::V => write!(f, "V({s},{t})"),
            BasisKind::H => write!(f, "H({})", self.s),
            BasisKind::HTilde => write!(f, "Ht({})", self.s),
            BasisKind::H0 => f.write_str("H0"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BasisVector {
    pub label: BasisLabel,
    pub matrix: SuperMatrix,
    pub odd: bool,
}

/// Normalized basis `v_i` of `sl(m|n)` with its dual `v̂_i` for `sp_sl`.
#[derive(Clone, Debug)]
pub struct SlBasis {
    pub shape: BlockShape,
    pub vectors: Vec<BasisVector>,
    pub duals: Vec<SuperMatrix>,
}

impl SlBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn count(&self, kind: BasisKind) -> usize {
        self.vectors.iter().filter(|v| v.label.kind == kind).count()
    }
}

fn inv_sqrt_norm(k: usize) -> RadicalScalar {
    // 1/√(k(k+1)) = √(k(k+1)) / (k(k+1))
    let p = (k * (k + 1)) as u64;
    RadicalScalar::sqrt(p).scale_rational(Rational::new(1, p as i64))
}

fn two_i() -> RadicalScalar {
    RadicalScalar::i().scale_int(2)
}

/// The `H_0` normalizer for the branch `n > m` or `n < m`.
fn h0_normalizer(m: usize, n: usize) -> RadicalScalar {
    if n > m {
        let d = m * (n - m);
        RadicalScalar::sqrt((n * d) as u64).scale_rational(Rational::new(1, d as i64))
    } else {
        let d = m * (m - n);
        RadicalScalar::sqrt((n * d) as u64).scale_rational(Rational::new(1, d as i64)) * RadicalScalar::i()
    }
}

pub fn build_sl_basis(shape: BlockShape) -> Result<SlBasis> {
    let (m, n) = (shape.m(), shape.n());
    let size = shape.size();
    let unit = |s, t| SuperMatrix::unit(shape, s, t);
    let mut vectors = Vec::with_capacity(shape.sl_dim());
    let mut duals = Vec::with_capacity(shape.sl_dim());
    let mut push = |kind, s, t, matrix: SuperMatrix, dual: SuperMatrix| {
        let odd = matches!(kind, BasisKind::V);
        vectors.push(BasisVector {
            label: BasisLabel { kind, s, t },
            matrix,
            odd,
        });
        duals.push(dual);
    };

    let pairs = |lo: usize, hi: usize| {
        let mut v = Vec::new();
        for s in lo..hi {
            for t in s + 1..hi {
                v.push((s, t));
            }
        }
        v
    };

    let even_roots = pairs(0, m);
    for &(s, t) in &even_roots {
        push(BasisKind::E, s, t, unit(s, t), unit(t, s).scale(&two_i()));
    }
    for &(s, t) in &even_roots {
        push(BasisKind::E, t, s, unit(t, s), unit(s, t).scale(&two_i()));
    }
    for k in 1..m {
        let mut h = SuperMatrix::zero(shape);
        for l in 0..k {
            h.set(l, l, RadicalScalar::one());
        }
        h.set(k, k, RadicalScalar::from_int(-(k as i64)));
        let h = h.scale(&inv_sqrt_norm(k));
        let dual = h.scale(&two_i());
        push(BasisKind::H, k, 0, h, dual);
    }

    let odd_block_roots = pairs(m, size);
    let i = RadicalScalar::i();
    for &(s, t) in &odd_block_roots {
        push(BasisKind::ETilde, s, t, unit(s, t).scale(&i), unit(t, s).scale(&i).scale(&two_i()));
    }
    for &(s, t) in &odd_block_roots {
        push(BasisKind::ETilde, t, s, unit(t, s).scale(&i), unit(s, t).scale(&i).scale(&two_i()));
    }
    for k in 1..n {
        let mut h = SuperMatrix::zero(shape);
        for l in m..m + k {
            h.set(l, l, RadicalScalar::one());
        }
        h.set(m + k, m + k, RadicalScalar::from_int(-(k as i64)));
        let h = h.scale(&(inv_sqrt_norm(k) * &i));
        let dual = h.scale(&two_i());
        push(BasisKind::HTilde, k, 0, h, dual);
    }

    let mut mixed = Vec::new();
    for s in 0..m {
        for t in m..size {
            mixed.push((s, t));
        }
    }
    for &(s, t) in &mixed {
        push(BasisKind::V, s, t, unit(s, t), unit(t, s).scale(&two_i()));
    }
    for &(s, t) in &mixed {
        push(BasisKind::V, t, s, unit(t, s), unit(s, t).scale(&-two_i()));
    }

    let c = h0_normalizer(m, n);
    let ratio = RadicalScalar::from_frac(m as i64, n as i64);
    let h0 = SuperMatrix::from_fn(shape, |a, b| match (a == b, a < m) {
        (false, _) => RadicalScalar::zero(),
        (true, true) => c.clone(),
        (true, false) => &c * &ratio,
    });
    let dual = h0.scale(&two_i());
    push(BasisKind::H0, 0, 0, h0, dual);

    let basis = SlBasis {
        shape,
        vectors,
        duals,
    };
    validate_sl(&basis)?;
    Ok(basis)
}

fn validate_sl(b: &SlBasis) -> Result<()> {
    for (i, v) in b.vectors.iter().enumerate() {
        for (j, d) in b.duals.iter().enumerate() {
            let got = sp_sl(&v.matrix, d);
            let want = if i == j { RadicalScalar::one() } else { RadicalScalar::zero() };
            if got != want {
                return Err(Error::DualityValidationFailed {
                    i,
                    j,
                    value: got.to_string(),
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(m: usize, n: usize) -> BlockShape {
        BlockShape::new(m, n).unwrap()
    }

    #[test]
    fn counts_21() {
        let b = build_sl_basis(shape(2, 1)).unwrap();
        assert_eq!(b.len(), 8);
        assert_eq!(b.count(BasisKind::E), 2);
        assert_eq!(b.count(BasisKind::H), 1);
        assert_eq!(b.count(BasisKind::ETilde), 0);
        assert_eq!(b.count(BasisKind::HTilde), 0);
        assert_eq!(b.count(BasisKind::V), 4);
        assert_eq!(b.count(BasisKind::H0), 1);
    }

    #[test]
    fn counts_12() {
        let b = build_sl_basis(shape(1, 2)).unwrap();
        assert_eq!(b.len(), 8);
        assert_eq!(b.count(BasisKind::ETilde), 2);
        assert_eq!(b.count(BasisKind::HTilde), 1);
        assert_eq!(b.count(BasisKind::V), 4);
        assert_eq!(b.count(BasisKind::E), 0);
    }

    #[test]
    fn equal_dimensions_rejected() {
        assert_eq!(BlockShape::new(2, 2), Err(Error::EqualDimensions(2)));
    }

    #[test]
    fn cartan_normalization() {
        for (m, n) in [(2, 1), (1, 2), (3, 1), (3, 2), (1, 3)] {
            let b = build_sl_basis(shape(m, n)).unwrap();
            for v in &b.vectors {
                assert!(v.matrix.supertrace().is_zero(), "{} not supertraceless", v.label);
                if v.label.triangle() == Triangle::Zero {
                    assert!(v.matrix.matmul(&v.matrix).supertrace().is_one(), "{}", v.label);
                }
            }
        }
    }

    #[test]
    fn order_and_labels() {
        let b = build_sl_basis(shape(2, 1)).unwrap();
        let labels: Vec<String> = b.vectors.iter().map(|v| v.label.to_string()).collect();
        assert_eq!(
            labels,
            ["E(1,2)", "E(2,1)", "H(1)", "V(1,3)", "V(2,3)", "V(3,1)", "V(3,2)", "H0"]
        );
    }
}

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::scalar::RadicalScalar;
use crate::supermatrix::Parity;

use super::monomial::{Gen, Monomial};

/// Truncated supercommutative polynomial: all monomials have degree `<= D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperPoly {
    degree: u8,
    terms: BTreeMap<Monomial, RadicalScalar>,
}

impl SuperPoly {
    pub fn zero(degree: u8) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: RadicalScalar, degree: u8) -> Self {
        Self::monomial(Monomial::ONE, c, degree)
    }

    pub fn one(degree: u8) -> Self {
        Self::constant(RadicalScalar::one(), degree)
    }

    pub fn gen(g: Gen, degree: u8) -> Self {
        Self::monomial(Monomial::gen(g), RadicalScalar::one(), degree)
    }

    /// `δ_ij + g`, i.e. `u_ij` for `g = y_ij`.
    pub fn unit_shifted(g: Gen, degree: u8) -> Self {
        let mut p = Self::gen(g, degree);
        if g.i() == g.j() {
            p.add_term(Monomial::ONE, RadicalScalar::one());
        }
        p
    }

    pub fn monomial(m: Monomial, c: RadicalScalar, degree: u8) -> Self {
        let mut p = Self::zero(degree);
        p.add_term(m, c);
        p
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RadicalScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> RadicalScalar {
        self.terms.get(m).cloned().unwrap_or_else(RadicalScalar::zero)
    }

    /// Adds `c·m`, dropping it if `m` exceeds the truncation.
    pub fn add_term(&mut self, m: Monomial, c: RadicalScalar) {
        if c.is_zero() || m.degree() > self.degree as usize {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c·o`.
    pub fn add_scaled(&mut self, o: &SuperPoly, c: &RadicalScalar) {
        assert_eq!(self.degree, o.degree, "truncation mismatch");
        for (m, v) in &o.terms {
            self.add_term(*m, v * c);
        }
    }

    pub fn add_assign(&mut self, o: &SuperPoly) {
        assert_eq!(self.degree, o.degree, "truncation mismatch");
        for (m, v) in &o.terms {
            self.add_term(*m, v.clone());
        }
    }

    pub fn parity(&self) -> Parity {
        let (mut even, mut odd) = (false, false);
        for m in self.terms.keys() {
            if m.odd() {
                odd = true;
            } else {
                even = true;
            }
        }
        match (even, odd) {
            (_, false) => Parity::Even,
            (false, true) => Parity::Odd,
            _ => Parity::Inhomogeneous,
        }
    }

    /// The even and odd components.
    pub fn split_parity(&self) -> (Self, Self) {
        let mut even = Self::zero(self.degree);
        let mut odd = Self::zero(self.degree);
        for (m, c) in &self.terms {
            let target = if m.odd() { &mut odd } else { &mut even };
            target.terms.insert(*m, c.clone());
        }
        (even, odd)
    }

    pub fn constant_term(&self) -> RadicalScalar {
        self.coeff(&Monomial::ONE)
    }

    pub fn linear_part(&self) -> BTreeMap<Gen, RadicalScalar> {
        self.terms
            .iter()
            .filter(|(m, _)| m.degree() == 1)
            .map(|(m, c)| (m.gens().next().expect("degree one"), c.clone()))
            .collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).min()
    }

    /// Same polynomial relabelled with truncation `d`, dropping terms above it.
    pub fn with_degree(&self, d: u8) -> Self {
        Self {
            degree: d,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= d as usize)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Equality modulo monomials of degree `> d`.
    pub fn eq_mod(&self, o: &Self, d: u8) -> bool {
        self.with_degree(d) == o.with_degree(d)
    }

    pub fn scale(&self, c: &RadicalScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        Self {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, v)| (*m, v.conj())).collect(),
        }
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        if self.degree != o.degree {
            return Err(Error::TruncationMismatch(self.degree, o.degree));
        }
        Ok(self.mul_trunc(o))
    }

    fn mul_trunc(&self, o: &Self) -> Self {
        let d = self.degree as usize;
        let mut out = Self::zero(self.degree);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                if ma.degree() + mb.degree() > d {
                    continue;
                }
                if let Some((m, neg)) = ma.mul(mb) {
                    let c = ca * cb;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        out
    }

    /// `m · self` for a monomial on the left.
    pub fn mono_mul_left(&self, m: &Monomial) -> Self {
        let mut out = Self::zero(self.degree);
        for (mb, cb) in &self.terms {
            if let Some((p, neg)) = m.mul(mb) {
                out.add_term(p, if neg { -cb } else { cb.clone() });
            }
        }
        out
    }

    /// `self · m` for a monomial on the right.
    pub fn mono_mul_right(&self, m: &Monomial) -> Self {
        let mut out = Self::zero(self.degree);
        for (ma, ca) in &self.terms {
            if let Some((p, neg)) = ma.mul(m) {
                out.add_term(p, if neg { -ca } else { ca.clone() });
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.degree);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The algebra morphism sending each generator `g` to `image(g)`; when
    /// `antilinear`, coefficients are conjugated. Images of odd generators
    /// must be odd and images must have zero constant term for the result to
    /// be exact modulo degree `> D`.
    pub fn substitute(&self, antilinear: bool, mut image: impl FnMut(Gen) -> SuperPoly) -> Self {
        let mut cache: FxHashMap<Gen, SuperPoly> = FxHashMap::default();
        let mut out = Self::zero(self.degree);
        for (m, c) in &self.terms {
            let mut acc = Self::one(self.degree);
            for g in m.gens() {
                let img = cache.entry(g).or_insert_with(|| image(g).with_degree(self.degree));
                acc = &acc * &*img;
                if acc.is_zero() {
                    break;
                }
            }
            let c = if antilinear { c.conj() } else { c.clone() };
            out.add_scaled(&acc, &c);
        }
        out
    }

    /// Term-wise linear map on monomials.
    pub fn map_monomials(&self, mut f: impl FnMut(&Monomial) -> SuperPoly) -> Self {
        let mut out = Self::zero(self.degree);
        for (m, c) in &self.terms {
            let img = f(m);
            for (mi, ci) in img.terms {
                out.add_term(mi, ci * c);
            }
        }
        out
    }
}

impl Add<&SuperPoly> for &SuperPoly {
    type Output = SuperPoly;
    fn add(self, o: &SuperPoly) -> SuperPoly {
        assert_eq!(self.degree, o.degree, "truncation mismatch");
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub<&SuperPoly> for &SuperPoly {
    type Output = SuperPoly;
    fn sub(self, o: &SuperPoly) -> SuperPoly {
        assert_eq!(self.degree, o.degree, "truncation mismatch");
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul<&SuperPoly> for &SuperPoly {
    type Output = SuperPoly;
    fn mul(self, o: &SuperPoly) -> SuperPoly {
        assert_eq!(self.degree, o.degree, "truncation mismatch");
        self.mul_trunc(o)
    }
}

impl Neg for &SuperPoly {
    type Output = SuperPoly;
    fn neg(self) -> SuperPoly {
        self.scale(&RadicalScalar::from_int(-1))
    }
}

impl fmt::Display for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let c = if c.term_count() > 1 { format!("({c})") } else { c.to_string() };
                if m.is_one() {
                    c
                } else {
                    format!("{c} * {m}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::supermatrix::BlockShape;

    fn sh() -> BlockShape {
        BlockShape::new(2, 1).unwrap()
    }

    #[test]
    fn odd_generator_squared() {
        let y13 = SuperPoly::gen(Gen::y(sh(), 0, 2), 3);
        assert!((&y13 * &y13).is_zero());
    }

    #[test]
    fn odd_anticommutation() {
        let a = SuperPoly::gen(Gen::y(sh(), 0, 2), 3);
        let b = SuperPoly::gen(Gen::y(sh(), 1, 2), 3);
        assert_eq!(&a * &b, -&(&b * &a));
    }

    #[test]
    fn truncated_geometric() {
        let y = SuperPoly::gen(Gen::y(sh(), 0, 0), 2);
        let one = SuperPoly::one(2);
        let a = &one + &y;
        let b = &(&one - &y) + &(&y * &y);
        assert_eq!(&a * &b, one);
    }

    #[test]
    fn mismatch_is_error() {
        let a = SuperPoly::one(2);
        let b = SuperPoly::one(3);
        assert_eq!(a.try_mul(&b), Err(Error::TruncationMismatch(2, 3)));
    }

    #[test]
    fn display_format() {
        let y = Gen::y(sh(), 0, 1);
        let z = Gen::z(sh(), 0, 2);
        let p = &(&SuperPoly::gen(y, 3) * &SuperPoly::gen(y, 3)) * &SuperPoly::gen(z, 3);
        assert_eq!(p.scale(&RadicalScalar::from_int(2)).to_string(), "2/1 * y[1,2]^2*z[1,3]");
        assert_eq!(SuperPoly::zero(3).to_string(), "0");
    }
}

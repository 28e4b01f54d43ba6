//! Exact scalars: Gaussian rationals with adjoined square roots of square-free
//! integers.
//!
//! A [`RadicalScalar`] is a finite sum `Σ_r (a_r + i·b_r)·√r` over square-free
//! radicands `r`, stored sparsely and sorted by radicand. Radicand `1` is the
//! rational part. The representation is canonical, so structural equality is
//! numeric equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::error::ScalarError;

/// Reduced fraction with positive denominator.
pub type Rational = num_rational::Ratio<i64>;

/// `re + i·im` with rational parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub const fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(Rational::from_integer(n), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    pub fn scale(self, q: Rational) -> Self {
        Self::new(self.re * q, self.im * q)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = self.re * self.re + self.im * self.im;
        Some(Self::new(self.re / norm, -self.im / norm))
    }
}

impl Add for Gaussian {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for Gaussian {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Neg for Gaussian {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Mul for Gaussian {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Self::new(self.re * rhs.re, Rational::zero());
        }
        Self::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct RadicalTerm {
    radicand: u64,
    coeff: Gaussian,
}

/// Exact element of ℚ(i)[√2, √3, √5, …].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RadicalScalar {
    // sorted by radicand, no zero coefficients
    terms: SmallVec<[RadicalTerm; 2]>,
}

/// Splits `n` into `(k, r)` with `n = k²·r` and `r` square-free.
pub fn square_free_split(n: u64) -> (u64, u64) {
    let mut k = 1u64;
    let mut r = 1u64;
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        k *= p.pow(e / 2);
        if e % 2 == 1 {
            r *= p;
        }
        p += 1;
    }
    (k, r * rest)
}

impl RadicalScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::from_gaussian(Gaussian::new(Rational::zero(), Rational::one()))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_gaussian(Gaussian::from_int(n))
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::from_gaussian(Gaussian::new(q, Rational::zero()))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(num, den))
    }

    pub fn from_gaussian(g: Gaussian) -> Self {
        Self::term(g, 1)
    }

    /// `g·√radicand`; the radicand need not be square-free.
    pub fn term(g: Gaussian, radicand: u64) -> Self {
        if g.is_zero() || radicand == 0 {
            return Self::zero();
        }
        let (k, r) = square_free_split(radicand);
        let coeff = g.scale(Rational::from_integer(k as i64));
        let mut terms = SmallVec::new();
        terms.push(RadicalTerm { radicand: r, coeff });
        Self { terms }
    }

    /// `√n` for a non-negative integer.
    pub fn sqrt(n: u64) -> Self {
        Self::term(Gaussian::from_int(1), n)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms[0].radicand == 1
            && self.terms[0].coeff == Gaussian::from_int(1)
    }

    /// Number of distinct radicands carried.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// `(radicand, coefficient)` pairs in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, Gaussian)> + '_ {
        self.terms.iter().map(|t| (t.radicand, t.coeff))
    }

    /// The Gaussian-rational part when the scalar has no irrational radicand.
    pub fn as_gaussian(&self) -> Option<Gaussian> {
        match self.terms.as_slice() {
            [] => Some(Gaussian::default()),
            [t] if t.radicand == 1 => Some(t.coeff),
            _ => None,
        }
    }

    /// The rational value when the scalar is real and rational.
    pub fn as_rational(&self) -> Option<Rational> {
        self.as_gaussian()
            .filter(|g| g.im.is_zero())
            .map(|g| g.re)
    }

    pub fn conj(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| RadicalTerm {
                radicand: t.radicand,
                coeff: t.coeff.conj(),
            })
            .collect();
        Self { terms }
    }

    pub fn scale_rational(&self, q: Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|t| RadicalTerm {
                radicand: t.radicand,
                coeff: t.coeff.scale(q),
            })
            .collect();
        Self { terms }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale_rational(Rational::from_integer(n))
    }

    /// Inverse of a single-term scalar: `(q·√r)⁻¹ = √r / (q·r)`.
    pub fn invert(&self) -> Result<Self, ScalarError> {
        match self.terms.as_slice() {
            [] => Err(ScalarError::DivisionByZero),
            [t] => {
                let denom = t.coeff.scale(Rational::from_integer(t.radicand as i64));
                let inv = denom.recip().ok_or(ScalarError::DivisionByZero)?;
                Ok(Self::term(inv, t.radicand))
            }
            _ => Err(ScalarError::MultiTermInverse(self.to_string())),
        }
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self * &rhs.invert()?)
    }

    fn add_term(&mut self, radicand: u64, coeff: Gaussian) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.binary_search_by_key(&radicand, |t| t.radicand) {
            Ok(pos) => {
                let c = self.terms[pos].coeff + coeff;
                if c.is_zero() {
                    self.terms.remove(pos);
                } else {
                    self.terms[pos].coeff = c;
                }
            }
            Err(pos) => self.terms.insert(pos, RadicalTerm { radicand, coeff }),
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        if self.terms.len() == 1 && rhs.terms.len() == 1 {
            let (a, b) = (self.terms[0], rhs.terms[0]);
            if a.radicand == 1 || b.radicand == 1 {
                out.add_term(a.radicand * b.radicand, a.coeff * b.coeff);
                return out;
            }
        }
        for a in &self.terms {
            for b in &rhs.terms {
                let g = a.radicand.gcd(&b.radicand);
                let radicand = (a.radicand / g) * (b.radicand / g);
                let coeff = (a.coeff * b.coeff).scale(Rational::from_integer(g as i64));
                out.add_term(radicand, coeff);
            }
        }
        out
    }
}

impl From<i64> for RadicalScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for RadicalScalar {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl From<Gaussian> for RadicalScalar {
    fn from(g: Gaussian) -> Self {
        Self::from_gaussian(g)
    }
}

impl AddAssign<&RadicalScalar> for RadicalScalar {
    fn add_assign(&mut self, rhs: &RadicalScalar) {
        for t in &rhs.terms {
            self.add_term(t.radicand, t.coeff);
        }
    }
}

impl AddAssign for RadicalScalar {
    fn add_assign(&mut self, rhs: RadicalScalar) {
        *self += &rhs;
    }
}

impl SubAssign<&RadicalScalar> for RadicalScalar {
    fn sub_assign(&mut self, rhs: &RadicalScalar) {
        for t in &rhs.terms {
            self.add_term(t.radicand, -t.coeff);
        }
    }
}

impl SubAssign for RadicalScalar {
    fn sub_assign(&mut self, rhs: RadicalScalar) {
        *self -= &rhs;
    }
}

impl MulAssign<&RadicalScalar> for RadicalScalar {
    fn mul_assign(&mut self, rhs: &RadicalScalar) {
        *self = self.mul_ref(rhs);
    }
}

impl Neg for RadicalScalar {
    type Output = RadicalScalar;
    fn neg(mut self) -> RadicalScalar {
        for t in &mut self.terms {
            t.coeff = -t.coeff;
        }
        self
    }
}

impl Neg for &RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $assign:ident) => {
        impl $trait<&RadicalScalar> for &RadicalScalar {
            type Output = RadicalScalar;
            fn $method(self, rhs: &RadicalScalar) -> RadicalScalar {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
        impl $trait<RadicalScalar> for RadicalScalar {
            type Output = RadicalScalar;
            fn $method(mut self, rhs: RadicalScalar) -> RadicalScalar {
                self.$assign(&rhs);
                self
            }
        }
        impl $trait<&RadicalScalar> for RadicalScalar {
            type Output = RadicalScalar;
            fn $method(mut self, rhs: &RadicalScalar) -> RadicalScalar {
                self.$assign(rhs);
                self
            }
        }
        impl $trait<RadicalScalar> for &RadicalScalar {
            type Output = RadicalScalar;
            fn $method(self, rhs: RadicalScalar) -> RadicalScalar {
                let mut out = self.clone();
                out.$assign(&rhs);
                out
            }
        }
    };
}

forward_binop!(Add, add, add_assign);
forward_binop!(Sub, sub, sub_assign);

impl Mul<&RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: &RadicalScalar) -> RadicalScalar {
        self.mul_ref(rhs)
    }
}

impl Mul<RadicalScalar> for RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: RadicalScalar) -> RadicalScalar {
        self.mul_ref(&rhs)
    }
}

impl Mul<&RadicalScalar> for RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: &RadicalScalar) -> RadicalScalar {
        self.mul_ref(rhs)
    }
}

impl Mul<RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: RadicalScalar) -> RadicalScalar {
        self.mul_ref(&rhs)
    }
}

impl std::iter::Sum for RadicalScalar {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc = Self::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

fn write_rat(f: &mut fmt::Formatter<'_>, q: &Rational) -> fmt::Result {
    write!(f, "{}/{}", q.numer(), q.denom())
}

/// Renders `term (" + " term)*` with `term := gauss ["*sqrt(" int ")"]`,
/// `gauss := rat ["+" rat "i"]` and `rat := int "/" posint`. Zero is `0/1`.
impl fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0/1");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write_rat(f, &t.coeff.re)?;
            if !t.coeff.im.is_zero() {
                f.write_str("+")?;
                write_rat(f, &t.coeff.im)?;
                f.write_str("i")?;
            }
            if t.radicand != 1 {
                write!(f, "*sqrt({})", t.radicand)?;
            }
        }
        Ok(())
    }
}

fn parse_rat(s: &str) -> Result<Rational, ScalarError> {
    let bad = || ScalarError::Parse(s.to_string());
    let (n, d) = s.split_once('/').ok_or_else(bad)?;
    let n: i64 = n.parse().map_err(|_| bad())?;
    let d: i64 = d.parse().map_err(|_| bad())?;
    if d <= 0 {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

fn parse_gauss(s: &str) -> Result<Gaussian, ScalarError> {
    match s.strip_suffix('i') {
        Some(body) => {
            // the separator is the first '+' after the real part's slash
            let slash = body.find('/').ok_or_else(|| ScalarError::Parse(s.to_string()))?;
            let plus = body[slash..]
                .find('+')
                .map(|p| p + slash)
                .ok_or_else(|| ScalarError::Parse(s.to_string()))?;
            Ok(Gaussian::new(
                parse_rat(&body[..plus])?,
                parse_rat(&body[plus + 1..])?,
            ))
        }
        None => Ok(Gaussian::new(parse_rat(s)?, Rational::zero())),
    }
}

impl FromStr for RadicalScalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = RadicalScalar::zero();
        for term in s.trim().split(" + ") {
            let (gauss, radicand) = match term.split_once("*sqrt(") {
                Some((g, rest)) => {
                    let r = rest
                        .strip_suffix(')')
                        .ok_or_else(|| ScalarError::Parse(term.to_string()))?;
                    let r: u64 = r.parse().map_err(|_| ScalarError::Parse(term.to_string()))?;
                    (g, r)
                }
                None => (term, 1),
            };
            out += RadicalScalar::term(parse_gauss(gauss)?, radicand);
        }
        Ok(out)
    }
}

/// Sign `(-1)^k` as a scalar.
pub fn sign(odd: bool) -> RadicalScalar {
    if odd {
        RadicalScalar::from_int(-1)
    } else {
        RadicalScalar::one()
    }
}

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::RadicalScalar;

use super::monomial::Monomial;
use super::poly::SuperPoly;

type Key = [Monomial; 3];

/// Rank-2 or rank-3 tensor of polynomials, truncated at total degree `D`.
/// Unused slots hold the unit monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPoly {
    rank: u8,
    degree: u8,
    terms: BTreeMap<Key, RadicalScalar>,
}

fn total(k: &Key) -> usize {
    k.iter().map(Monomial::degree).sum()
}

impl TensorPoly {
    pub fn zero(rank: usize, degree: u8) -> Self {
        assert!(rank == 2 || rank == 3, "tensor rank must be 2 or 3");
        Self {
            rank: rank as u8,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize, degree: u8) -> Self {
        let mut t = Self::zero(rank, degree);
        t.add_term([Monomial::ONE; 3], RadicalScalar::one());
        t
    }

    /// `f_1 ⊗ f_2 (⊗ f_3)`; the truncation of the first factor is used.
    pub fn pure(factors: &[&SuperPoly]) -> Self {
        let degree = factors[0].degree();
        let mut t = Self::one(factors.len(), degree);
        for (slot, f) in factors.iter().enumerate() {
            let mut next = Self::zero(factors.len(), degree);
            for (k, c) in &t.terms {
                for (m, v) in f.terms() {
                    let mut key = *k;
                    key[slot] = *m;
                    next.add_term(key, c * v);
                }
            }
            t = next;
        }
        t
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &RadicalScalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, k: Key, c: RadicalScalar) {
        if c.is_zero() || total(&k) > self.degree as usize {
            return;
        }
        match self.terms.entry(k) {
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

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, -c);
        }
        out
    }

    pub fn scale(&self, c: &RadicalScalar) -> Self {
        let mut out = Self::zero(self.rank(), self.degree);
        for (k, v) in &self.terms {
            out.add_term(*k, v * c);
        }
        out
    }

    /// Same tensor with truncation `d`.
    pub fn with_degree(&self, d: u8) -> Self {
        let mut out = Self::zero(self.rank(), d);
        for (k, v) in &self.terms {
            out.add_term(*k, v.clone());
        }
        out
    }

    /// Koszul product: `(a⊗b⊗c)(d⊗e⊗f) = (−1)^{|d|(|b|+|c|) + |e||c|} ad⊗be⊗cf`.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.rank, o.rank, "tensor rank mismatch");
        let d = self.degree as usize;
        let mut out = Self::zero(self.rank(), self.degree);
        for (ka, ca) in &self.terms {
            let ta = total(ka);
            let (pb, pc) = (ka[1].odd(), ka[2].odd());
            for (kb, cb) in &o.terms {
                if ta + total(kb) > d {
                    continue;
                }
                let mut neg = (kb[0].odd() && (pb ^ pc)) ^ (kb[1].odd() && pc);
                let mut key = [Monomial::ONE; 3];
                let mut ok = true;
                for s in 0..3 {
                    match ka[s].mul(&kb[s]) {
                        Some((m, sg)) => {
                            key[s] = m;
                            neg ^= sg;
                        }
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    let c = ca * cb;
                    out.add_term(key, if neg { -c } else { c });
                }
            }
        }
        out
    }

    /// Applies a linear map of parity `odd` to one slot, with the Koszul sign
    /// of moving it past the earlier slots.
    pub fn map_slot(&self, slot: usize, odd: bool, mut f: impl FnMut(&Monomial) -> SuperPoly) -> Self {
        let mut out = Self::zero(self.rank(), self.degree);
        for (k, c) in &self.terms {
            let neg = odd && k[..slot].iter().filter(|m| m.odd()).count() % 2 == 1;
            let img = f(&k[slot]);
            for (m, v) in img.terms() {
                let mut key = *k;
                key[slot] = *m;
                let val = v * c;
                out.add_term(key, if neg { -val } else { val });
            }
        }
        out
    }

    /// Splits slot `slot` of a rank-2 tensor by an even map into a rank-2
    /// tensor (such as `Δ`), producing rank 3.
    pub fn expand_slot(&self, slot: usize, mut f: impl FnMut(&Monomial) -> TensorPoly) -> Self {
        assert_eq!(self.rank, 2, "expand_slot needs a rank-2 tensor");
        let mut out = Self::zero(3, self.degree);
        for (k, c) in &self.terms {
            let img = f(&k[slot]);
            for (ki, v) in img.terms() {
                let key = if slot == 0 {
                    [ki[0], ki[1], k[1]]
                } else {
                    [k[0], ki[0], ki[1]]
                };
                out.add_term(key, v * c);
            }
        }
        out
    }

    /// Contracts one slot of a rank-2 tensor by a scalar functional (such as
    /// `ε` or an `ε`-derivation of parity `odd`), returning a polynomial.
    pub fn contract_slot(&self, slot: usize, odd: bool, mut f: impl FnMut(&Monomial) -> RadicalScalar) -> SuperPoly {
        assert_eq!(self.rank, 2, "contract_slot needs a rank-2 tensor");
        let mut out = SuperPoly::zero(self.degree);
        for (k, c) in &self.terms {
            let v = f(&k[slot]);
            if v.is_zero() {
                continue;
            }
            let other = k[1 - slot];
            let neg = slot == 1 && odd && k[0].odd();
            let val = v * c;
            out.add_term(other, if neg { -val } else { val });
        }
        out
    }

    /// Multiplies the slots together in order.
    pub fn multiply_out(&self) -> SuperPoly {
        let mut out = SuperPoly::zero(self.degree);
        for (k, c) in &self.terms {
            let mut acc = Some((Monomial::ONE, false));
            for m in &k[..self.rank()] {
                acc = acc.and_then(|(a, s)| a.mul(m).map(|(p, t)| (p, s ^ t)));
            }
            if let Some((m, neg)) = acc {
                out.add_term(m, if neg { -c } else { c.clone() });
            }
        }
        out
    }
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let slots: Vec<String> = k[..self.rank()].iter().map(|m| m.to_string()).collect();
                format!("({c}) * {}", slots.join(" (x) "))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::monomial::Gen;
    use crate::supermatrix::BlockShape;

    #[test]
    fn koszul_product_sign() {
        let sh = BlockShape::new(2, 1).unwrap();
        let a = SuperPoly::gen(Gen::y(sh, 0, 2), 3);
        let b = SuperPoly::gen(Gen::y(sh, 1, 2), 3);
        let one = SuperPoly::one(3);
        // (1⊗a)(b⊗1) = −(b⊗a)
        let lhs = TensorPoly::pure(&[&one, &a]).mul(&TensorPoly::pure(&[&b, &one]));
        assert_eq!(lhs, TensorPoly::pure(&[&b, &a]).scale(&RadicalScalar::from_int(-1)));
        // (a⊗1)(1⊗b) = a⊗b
        let lhs = TensorPoly::pure(&[&a, &one]).mul(&TensorPoly::pure(&[&one, &b]));
        assert_eq!(lhs, TensorPoly::pure(&[&a, &b]));
    }

    #[test]
    fn rank3_sign() {
        let sh = BlockShape::new(2, 1).unwrap();
        let a = SuperPoly::gen(Gen::y(sh, 0, 2), 3);
        let b = SuperPoly::gen(Gen::y(sh, 1, 2), 3);
        let c = SuperPoly::gen(Gen::z(sh, 0, 2), 3);
        let one = SuperPoly::one(3);
        // (1⊗a⊗b)(c⊗1⊗1): c passes a and b, sign +1
        let lhs = TensorPoly::pure(&[&one, &a, &b]).mul(&TensorPoly::pure(&[&c, &one, &one]));
        assert_eq!(lhs, TensorPoly::pure(&[&c, &a, &b]));
        // (1⊗1⊗a)(1⊗b⊗1): b passes a, sign −1
        let lhs = TensorPoly::pure(&[&one, &one, &a]).mul(&TensorPoly::pure(&[&one, &b, &one]));
        assert_eq!(lhs, TensorPoly::pure(&[&one, &b, &a]).scale(&RadicalScalar::from_int(-1)));
    }
}

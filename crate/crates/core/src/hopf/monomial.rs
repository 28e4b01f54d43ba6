use std::fmt;

use crate::supermatrix::BlockShape;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Y = 0,
    Z = 1,
    X = 2,
}

impl Kind {
    fn letter(self) -> char {
        match self {
            Kind::Y => 'y',
            Kind::Z => 'z',
            Kind::X => 'x',
        }
    }
}

/// A generator `y_ij`, `z_ij` or `x_ij`, packed as
/// `parity << 12 | kind << 8 | i << 4 | j` so that the integer order is the
/// canonical monomial order (even before odd, then kind, row, column).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen(u16);

impl Gen {
    /// 0-based indices.
    pub fn new(shape: BlockShape, kind: Kind, i: usize, j: usize) -> Self {
        let odd = shape.entry_odd(i, j) as u16;
        Gen(odd << 12 | (kind as u16) << 8 | (i as u16) << 4 | j as u16)
    }

    pub fn y(shape: BlockShape, i: usize, j: usize) -> Self {
        Self::new(shape, Kind::Y, i, j)
    }

    pub fn z(shape: BlockShape, i: usize, j: usize) -> Self {
        Self::new(shape, Kind::Z, i, j)
    }

    pub fn x(shape: BlockShape, i: usize, j: usize) -> Self {
        Self::new(shape, Kind::X, i, j)
    }

    pub fn kind(self) -> Kind {
        match (self.0 >> 8) & 0xf {
            0 => Kind::Y,
            1 => Kind::Z,
            _ => Kind::X,
        }
    }

    pub fn i(self) -> usize {
        ((self.0 >> 4) & 0xf) as usize
    }

    pub fn j(self) -> usize {
        (self.0 & 0xf) as usize
    }

    pub fn odd(self) -> bool {
        self.0 >> 12 != 0
    }

    pub fn with_kind(self, kind: Kind) -> Self {
        Gen(self.0 & !0x0f00 | (kind as u16) << 8)
    }

    /// `g_ji` of the same kind.
    pub fn transposed(self) -> Self {
        Gen(self.0 & 0xff00 | (self.j() as u16) << 4 | self.i() as u16)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]", self.kind().letter(), self.i() + 1, self.j() + 1)
    }
}

/// All generators of one kind, row-major.
pub fn generators(shape: BlockShape, kind: Kind) -> Vec<Gen> {
    let s = shape.size();
    (0..s)
        .flat_map(|i| (0..s).map(move |j| Gen::new(shape, kind, i, j)))
        .collect()
}

/// `y` then `z` generators.
pub fn double_generators(shape: BlockShape) -> Vec<Gen> {
    let mut v = generators(shape, Kind::Y);
    v.extend(generators(shape, Kind::Z));
    v
}

pub const MAX_DEGREE: usize = 8;

/// Canonically ordered product of generators. Odd generators never repeat.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    len: u8,
    keys: [u16; MAX_DEGREE],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        len: 0,
        keys: [0; MAX_DEGREE],
    };

    pub fn gen(g: Gen) -> Self {
        let mut keys = [0; MAX_DEGREE];
        keys[0] = g.0;
        Monomial { len: 1, keys }
    }

    pub fn degree(&self) -> usize {
        self.len as usize
    }

    pub fn is_one(&self) -> bool {
        self.len == 0
    }

    pub fn gens(&self) -> impl DoubleEndedIterator<Item = Gen> + ExactSizeIterator + '_ {
        self.keys[..self.len as usize].iter().map(|&k| Gen(k))
    }

    pub fn odd(&self) -> bool {
        self.gens().filter(|g| g.odd()).count() % 2 == 1
    }

    /// Sub-monomial of positions `lo..hi`; a contiguous run of a canonical
    /// monomial is canonical.
    pub fn slice(&self, lo: usize, hi: usize) -> Self {
        let mut keys = [0; MAX_DEGREE];
        keys[..hi - lo].copy_from_slice(&self.keys[lo..hi]);
        Monomial {
            len: (hi - lo) as u8,
            keys,
        }
    }

    /// Product with the Koszul sign of reordering (`true` = negative), or
    /// `None` when an odd generator repeats.
    pub fn mul(&self, o: &Self) -> Option<(Self, bool)> {
        let (la, lb) = (self.len as usize, o.len as usize);
        if la + lb > MAX_DEGREE {
            return None;
        }
        let mut keys = [0; MAX_DEGREE];
        let (mut p, mut q, mut k) = (0, 0, 0);
        // odd factors of `self` not yet emitted, for the inversion count
        let mut odd_left = self.keys[..la].iter().filter(|&&x| x >> 12 != 0).count();
        let mut neg = false;
        while p < la || q < lb {
            let take_a = q == lb || (p < la && self.keys[p] <= o.keys[q]);
            if take_a {
                if p < la && q < lb && self.keys[p] == o.keys[q] && self.keys[p] >> 12 != 0 {
                    return None;
                }
                if self.keys[p] >> 12 != 0 {
                    odd_left -= 1;
                }
                keys[k] = self.keys[p];
                p += 1;
            } else {
                if o.keys[q] >> 12 != 0 && odd_left % 2 == 1 {
                    neg = !neg;
                }
                keys[k] = o.keys[q];
                q += 1;
            }
            k += 1;
        }
        Some((
            Monomial {
                len: k as u8,
                keys,
            },
            neg,
        ))
    }

    /// Canonical monomial of an arbitrary ordered product.
    pub fn from_gens(gens: &[Gen]) -> Option<(Self, bool)> {
        let mut acc = (Monomial::ONE, false);
        for &g in gens {
            let (m, s) = acc.0.mul(&Monomial::gen(g))?;
            acc = (m, acc.1 ^ s);
        }
        Some(acc)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let keys = &self.keys[..self.len as usize];
        let mut first = true;
        let mut p = 0;
        while p < keys.len() {
            let mut q = p + 1;
            while q < keys.len() && keys[q] == keys[p] {
                q += 1;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{}", Gen(keys[p]))?;
            if q - p > 1 {
                write!(f, "^{}", q - p)?;
            }
            p = q;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh() -> BlockShape {
        BlockShape::new(2, 1).unwrap()
    }

    #[test]
    fn gen_packing() {
        let g = Gen::z(sh(), 0, 2);
        assert_eq!((g.kind(), g.i(), g.j(), g.odd()), (Kind::Z, 0, 2, true));
        assert_eq!(g.to_string(), "z[1,3]");
        assert_eq!(g.transposed(), Gen::z(sh(), 2, 0));
        assert_eq!(g.with_kind(Kind::Y), Gen::y(sh(), 0, 2));
        assert!(Gen::y(sh(), 2, 2) < Gen::y(sh(), 0, 2));
    }

    #[test]
    fn odd_square_vanishes() {
        let a = Monomial::gen(Gen::y(sh(), 0, 2));
        assert!(a.mul(&a).is_none());
    }

    #[test]
    fn odd_anticommute() {
        let a = Gen::y(sh(), 0, 2);
        let b = Gen::y(sh(), 1, 2);
        let (m1, s1) = Monomial::from_gens(&[a, b]).unwrap();
        let (m2, s2) = Monomial::from_gens(&[b, a]).unwrap();
        assert_eq!(m1, m2);
        assert_ne!(s1, s2);
    }

    #[test]
    fn even_commute_and_display() {
        let a = Gen::y(sh(), 0, 0);
        let b = Gen::y(sh(), 0, 1);
        let (m, s) = Monomial::from_gens(&[b, a, a]).unwrap();
        assert!(!s);
        assert_eq!(m.to_string(), "y[1,1]^2*y[1,2]");
        let c = Gen::z(sh(), 2, 0);
        let (m, s) = Monomial::from_gens(&[c, a, Gen::y(sh(), 1, 2)]).unwrap();
        // y[2,3] sorts before z[3,1]: one odd swap
        assert!(s);
        assert_eq!(m.to_string(), "y[1,1]*y[2,3]*z[3,1]");
    }
}

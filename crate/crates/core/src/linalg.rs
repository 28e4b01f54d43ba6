//! Exact linear algebra over ℚ with arbitrary-precision rationals.
//!
//! Systems whose matrix is rational but whose right-hand side carries radicals
//! are solved one ℚ-component at a time: `ℚ(i)[√r…]` is a ℚ-vector space with
//! basis `{√r, i·√r}`, and a rational matrix acts on each component separately.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::{Gaussian, RadicalScalar, Rational};

pub fn big(q: Rational) -> BigRational {
    BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

fn small(q: &BigRational) -> Rational {
    use num_traits::ToPrimitive;
    let n = q.numer().to_i64().expect("solution numerator fits in i64");
    let d = q.denom().to_i64().expect("solution denominator fits in i64");
    Rational::new(n, d)
}

/// Row-reduces in place; returns pivot columns.
fn rref(rows: &mut [Vec<BigRational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    if !pv.is_zero() {
                        *v -= &f * pv;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let ncols = first.len();
    let mut work = rows.to_vec();
    rref(&mut work, ncols).len()
}

/// Solves `A x = b` over ℚ. Returns one solution (free variables zero), or
/// `None` when inconsistent.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![BigRational::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][ncols].clone();
    }
    Some(x)
}

/// Key of a ℚ-component: radicand and real/imaginary flag.
type Component = (u64, bool);

fn components(v: &[RadicalScalar]) -> BTreeMap<Component, Vec<BigRational>> {
    let mut out: BTreeMap<Component, Vec<BigRational>> = BTreeMap::new();
    for (k, s) in v.iter().enumerate() {
        for (r, g) in s.terms() {
            for (imag, q) in [(false, g.re), (true, g.im)] {
                if !q.is_zero() {
                    out.entry((r, imag))
                        .or_insert_with(|| vec![BigRational::zero(); v.len()])[k] = big(q);
                }
            }
        }
    }
    out
}

/// Solves `A x = b` with rational `A` and radical `b`.
pub fn solve_radical(a: &[Vec<BigRational>], b: &[RadicalScalar]) -> Option<Vec<RadicalScalar>> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut x = vec![RadicalScalar::zero(); ncols];
    for ((r, imag), rhs) in components(b) {
        let part = solve(a, &rhs)?;
        for (xi, q) in x.iter_mut().zip(&part) {
            if q.is_zero() {
                continue;
            }
            let q = small(q);
            let g = if imag {
                Gaussian::new(Rational::zero(), q)
            } else {
                Gaussian::new(q, Rational::zero())
            };
            *xi += RadicalScalar::term(g, r);
        }
    }
    Some(x)
}

/// Whether `target` lies in the span of `vectors`. The vectors must have
/// rational entries; the target may carry radicals.
pub fn in_rational_span(vectors: &[Vec<BigRational>], target: &[RadicalScalar]) -> bool {
    if vectors.is_empty() {
        return target.iter().all(RadicalScalar::is_zero);
    }
    let len = target.len();
    let a: Vec<Vec<BigRational>> = (0..len)
        .map(|row| vectors.iter().map(|v| v[row].clone()).collect())
        .collect();
    solve_radical(&a, target).is_some()
}

/// Rational matrix entry from a scalar that must be rational.
pub fn rational_entry(s: &RadicalScalar) -> Option<BigRational> {
    s.as_rational().map(big)
}

pub fn unit(n: usize, k: usize) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); n];
    v[k] = BigRational::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn rank_and_solve() {
        let a = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(rank(&a), 1);
        assert!(solve(&a, &[q(1), q(3)]).is_none());
        let x = solve(&a, &[q(1), q(2)]).unwrap();
        assert_eq!(x, vec![q(1), q(0)]);
    }

    #[test]
    fn radical_rhs() {
        let a = vec![vec![q(2), q(0)], vec![q(0), q(1)]];
        let b = vec![RadicalScalar::sqrt(2), RadicalScalar::i()];
        let x = solve_radical(&a, &b).unwrap();
        assert_eq!(x[0], RadicalScalar::sqrt(2).scale_rational(Rational::new(1, 2)));
        assert_eq!(x[1], RadicalScalar::i());
    }

    #[test]
    fn span_membership() {
        let v = vec![vec![q(1), q(1), q(0)]];
        assert!(in_rational_span(&v, &[RadicalScalar::sqrt(3), RadicalScalar::sqrt(3), RadicalScalar::zero()]));
        assert!(!in_rational_span(&v, &[RadicalScalar::one(), RadicalScalar::zero(), RadicalScalar::zero()]));
    }
}

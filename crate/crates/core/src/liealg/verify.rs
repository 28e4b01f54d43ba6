use rayon::prelude::*;
use serde::Serialize;

use crate::report::{Cell, SuiteResult, Witness};
use crate::scalar::RadicalScalar;
use crate::supermatrix::{sp_double, sp_sl, DoubleElement, SuperMatrix};

use super::basis::Triangle;
use super::double::{r_operator, DoubleBasis, Side};
use super::real::{fixed_point_dims, k_twist, phi_double, twist_conjugator};

fn pairs(b: &DoubleBasis) -> Vec<(Side, Side)> {
    let sides: Vec<Side> = b.sides().collect();
    sides.iter().flat_map(|&x| sides.iter().map(move |&y| (x, y))).collect()
}

fn witness(b: &DoubleBasis, check: &str, xs: &[Side], defect: impl ToString) -> Witness {
    Witness::new(check, xs.iter().map(|&s| b.label(s)).collect(), defect)
}

fn zero_cell(b: &DoubleBasis, check: &str, xs: &[Side], d: &DoubleElement) -> Cell {
    if d.is_zero() {
        Ok(())
    } else {
        Err(witness(b, check, xs, d))
    }
}

fn eq_cell(b: &DoubleBasis, check: &str, xs: &[Side], lhs: &RadicalScalar, rhs: &RadicalScalar) -> Cell {
    if lhs == rhs {
        Ok(())
    } else {
        Err(witness(b, check, xs, lhs - rhs))
    }
}

fn br(x: &DoubleElement, y: &DoubleElement) -> DoubleElement {
    x.bracket(y).expect("basis elements are homogeneous")
}

fn r(x: &DoubleElement) -> DoubleElement {
    r_operator(x).expect("basis elements lie in the double")
}

fn phi(x: &DoubleElement) -> DoubleElement {
    phi_double(x).expect("basis elements are homogeneous")
}

/// `sp_sl(v_i, v̂_j) = δ_ij` and `sp_double(T_i, t_j) = δ_ij`, cell by cell.
pub fn verify_basis_duality(b: &DoubleBasis) -> SuiteResult {
    let mut out = SuiteResult::new("basis-duality");
    let n = b.len();
    let kron = |i: usize, j: usize| if i == j { RadicalScalar::one() } else { RadicalScalar::zero() };
    for i in 0..n {
        for j in 0..n {
            let got = sp_sl(&b.sl.vectors[i].matrix, &b.sl.duals[j]);
            out.record(eq_cell(b, "sp_sl(v_i, dual v_j)", &[Side::T(i), Side::T(j)], &got, &kron(i, j)));
            let got = sp_double(&b.big_t[i], &b.small_t[j]);
            out.record(eq_cell(b, "sp_double(T_i, t_j)", &[Side::T(i), Side::Small(j)], &got, &kron(i, j)));
        }
    }
    out
}

/// Yang-Baxter defect, antisymmetry of `R`, `φR = Rφ` and `φ`-compatibility of
/// the scalar product on every ordered pair of the combined basis.
pub fn verify_baxter(b: &DoubleBasis) -> SuiteResult {
    let mut out = SuiteResult::new("baxter");
    let cells: Vec<Vec<Cell>> = pairs(b)
        .into_par_iter()
        .map(|(sx, sy)| {
            let (x, y) = (b.get(sx), b.get(sy));
            let (rx, ry) = (r(x), r(y));
            let lhs = br(&rx, &ry);
            let inner = br(&rx, y).add(&br(x, &ry));
            let defect = lhs.sub(&r(&inner)).add(&br(x, y));
            let xs = [sx, sy];
            vec![
                zero_cell(b, "[Rx,Ry] - R([Rx,y]+[x,Ry]) + [x,y]", &xs, &defect),
                eq_cell(b, "(Rx,y) = -(x,Ry)", &xs, &sp_double(&rx, y), &-sp_double(x, &ry)),
                eq_cell(b, "(phi x, phi y) = conj (x,y)", &xs, &sp_double(&phi(x), &phi(y)), &sp_double(x, y).conj()),
            ]
        })
        .collect();
    out.record_all(cells.into_iter().flatten());
    for s in b.sides() {
        let x = b.get(s);
        let d = phi(&r(x)).sub(&r(&phi(x)));
        out.record(zero_cell(b, "phi R x = R phi x", &[s], &d));
    }
    out
}

/// Isotropy and closure of `g` and `b`, the triangular-decomposition
/// properties, and dual-basis reconstruction.
pub fn verify_manin(b: &DoubleBasis) -> SuiteResult {
    let mut out = SuiteResult::new("manin");
    let n = b.len();
    let cells: Vec<Vec<Cell>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut v = Vec::new();
            for j in 0..n {
                let xs_g = [Side::T(i), Side::T(j)];
                let xs_b = [Side::Small(i), Side::Small(j)];
                v.push(eq_cell(b, "(T_i, T_j) = 0", &xs_g, &sp_double(&b.big_t[i], &b.big_t[j]), &RadicalScalar::zero()));
                v.push(eq_cell(b, "(t_i, t_j) = 0", &xs_b, &sp_double(&b.small_t[i], &b.small_t[j]), &RadicalScalar::zero()));
                // a bracket in g has no t-coordinates; one in b has no T-coordinates
                let (_, on_t) = b.coords(&br(&b.big_t[i], &b.big_t[j]));
                v.extend(on_t.iter().map(|c| eq_cell(b, "[T_i,T_j] coefficient on t", &xs_g, c, &RadicalScalar::zero())));
                let (on_big, _) = b.coords(&br(&b.small_t[i], &b.small_t[j]));
                v.extend(on_big.iter().map(|c| eq_cell(b, "[t_i,t_j] coefficient on T", &xs_b, c, &RadicalScalar::zero())));
            }
            v
        })
        .collect();
    out.record_all(cells.into_iter().flatten());

    for s in b.sides() {
        let x = b.get(s);
        let (a, c) = b.coords(x);
        let back = b.reconstruct(&a, &c);
        out.record(zero_cell(b, "dual-basis reconstruction", &[s], &back.sub(x)));
    }
    out.absorb(verify_triangular(b));
    out.name = "manin".into();
    out
}

fn part(m: &SuperMatrix, t: Triangle) -> SuperMatrix {
    match t {
        Triangle::Plus => m.upper(),
        Triangle::Zero => m.diagonal(),
        Triangle::Minus => m.lower(),
    }
}

/// `sl_+`, `sl_0`, `sl_−` are subalgebras; `sl_± ⊥ sl_±` and `sl_0 ⊥ sl_±`.
pub fn verify_triangular(b: &DoubleBasis) -> SuiteResult {
    let mut out = SuiteResult::new("triangular");
    let vs = &b.sl.vectors;
    for (i, v) in vs.iter().enumerate() {
        for (j, w) in vs.iter().enumerate() {
            let (ti, tj) = (v.label.triangle(), w.label.triangle());
            let xs = [Side::T(i), Side::T(j)];
            if ti == tj {
                let c = v.matrix.superbracket(&w.matrix).expect("homogeneous");
                let leak = c.sub(&part(&c, ti));
                out.check(leak.is_zero(), || witness(b, "sl_k closed under bracket", &xs, &leak));
            }
            let orthogonal = matches!(
                (ti, tj),
                (Triangle::Plus, Triangle::Plus)
                    | (Triangle::Minus, Triangle::Minus)
                    | (Triangle::Zero, Triangle::Plus)
                    | (Triangle::Zero, Triangle::Minus)
                    | (Triangle::Plus, Triangle::Zero)
                    | (Triangle::Minus, Triangle::Zero)
            );
            if orthogonal {
                let p = sp_sl(&v.matrix, &w.matrix);
                out.check(p.is_zero(), || witness(b, "triangular orthogonality", &xs, &p));
            }
        }
    }
    out
}

/// Fixed-point dimensions of `φ` on `g`, plus the K-twist law and its
/// conjugacy to `φ`.
pub fn verify_real_form(b: &DoubleBasis) -> SuiteResult {
    let mut out = SuiteResult::new("real-form");
    let sh = b.shape();
    let (m, n) = (sh.m(), sh.n());
    match fixed_point_dims(sh) {
        Ok((even, odd)) => {
            let want = m * m + n * n - 1;
            out.check(even == want, || {
                Witness::new("even fixed dimension", vec![sh.to_string()], format!("{even} != {want}"))
            });
            out.check(odd == 0, || Witness::new("odd fixed dimension", vec![sh.to_string()], odd));
        }
        Err(e) => out.record(Err(Witness::new("fixed-point system", vec![sh.to_string()], e))),
    }
    for s in b.sides() {
        let x = b.get(s);
        let p2 = phi(&phi(x));
        let want = if b.side_odd(s) { x.neg() } else { x.clone() };
        out.record(zero_cell(b, "phi^2 = (-1)^|x|", &[s], &p2.sub(&want)));
        let twisted = k_twist(x).expect("homogeneous");
        let law = if b.side_odd(s) { phi(x).neg() } else { phi(x) };
        out.record(zero_cell(b, "K phi(K^-1 x) = (-1)^|x| phi(x)", &[s], &twisted.sub(&law)));
        let conj = twist_conjugator(&phi(&twist_conjugator(x, true)), false);
        out.record(zero_cell(b, "twist conjugate to phi", &[s], &conj.sub(&twisted)));
        let ix = x.scale(&RadicalScalar::i());
        let anti = phi(&ix).add(&phi(x).scale(&RadicalScalar::i()));
        out.record(zero_cell(b, "phi antilinear", &[s], &anti));
    }
    let cells: Vec<Vec<Cell>> = pairs(b)
        .into_par_iter()
        .map(|(sx, sy)| {
            let (x, y) = (b.get(sx), b.get(sy));
            let xs = [sx, sy];
            let d = phi(&br(x, y)).sub(&br(&phi(x), &phi(y)));
            let tw = |z: &DoubleElement| k_twist(z).expect("homogeneous");
            let dk = tw(&br(x, y)).sub(&br(&tw(x), &tw(y)));
            vec![
                zero_cell(b, "phi [x,y] = [phi x, phi y]", &xs, &d),
                zero_cell(b, "twist is a Lie morphism", &xs, &dk),
            ]
        })
        .collect();
    out.record_all(cells.into_iter().flatten());
    out
}

/// One nonzero structure constant `[b_i, b_j] = Σ c·b_k` over the combined
/// basis; `i` and `j` index the combined list `T…, t…`, `basis`/`k` name `b_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureConstant {
    pub basis: &'static str,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: String,
}

pub fn structure_constants(b: &DoubleBasis) -> Vec<StructureConstant> {
    let sides: Vec<Side> = b.sides().collect();
    let mut out = Vec::new();
    for (i, &x) in sides.iter().enumerate() {
        for (j, &y) in sides.iter().enumerate() {
            let (on_t, on_small) = b.coords(&br(b.get(x), b.get(y)));
            for (basis, coeffs) in [("T", on_t), ("t", on_small)] {
                for (k, c) in coeffs.into_iter().enumerate() {
                    if !c.is_zero() {
                        out.push(StructureConstant {
                            basis,
                            i,
                            j,
                            k,
                            value: c.to_string(),
                        });
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::double::build_double_basis;
    use crate::supermatrix::BlockShape;

    #[test]
    fn suites_pass_small() {
        for (m, n) in [(2, 1), (1, 2)] {
            let b = build_double_basis(BlockShape::new(m, n).unwrap()).unwrap();
            for s in [verify_basis_duality(&b), verify_baxter(&b), verify_manin(&b), verify_real_form(&b)] {
                assert!(s.ok(), "{} {:?}", s.name, s.witness);
                assert!(s.attempted > 0);
            }
        }
    }

    #[test]
    fn constants_reconstruct_bracket() {
        let b = build_double_basis(BlockShape::new(2, 1).unwrap()).unwrap();
        let cs = structure_constants(&b);
        assert!(!cs.is_empty());
        let sides: Vec<Side> = b.sides().collect();
        let (x, y) = (sides[0], sides[1]);
        let mut acc = DoubleElement::zero(b.shape());
        for c in cs.iter().filter(|c| c.i == 0 && c.j == 1) {
            let v: RadicalScalar = c.value.parse().unwrap();
            let e = if c.basis == "T" { &b.big_t[c.k] } else { &b.small_t[c.k] };
            acc = acc.add(&e.scale(&v));
        }
        assert_eq!(acc, br(b.get(x), b.get(y)));
    }
}

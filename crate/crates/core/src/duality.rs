//! The cotangent space `Kerε/(Kerε)²`, the dual families `f_i`, `g_i`, the
//! induced brackets on `G*` and `B*` and the transports `T` and `S`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hopf::{double_generators, Gen, HopfAlgebra, Kind, SuperPoly};
use crate::liealg::{k_twist, phi_double, BasisKind, DoubleBasis, Side, StructureConstant};
use crate::poisson::Bracket;
use crate::report::{Cell, SuiteResult, Witness};
use crate::scalar::{sign, RadicalScalar};
use crate::supermatrix::{sp_double, BlockShape, DoubleElement};

/// `Ω(f)`: the linear part of a representative with `ε(f) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CotangentVector {
    pub coords: BTreeMap<Gen, RadicalScalar>,
    pub odd: bool,
}

impl CotangentVector {
    pub fn zero() -> Self {
        Self {
            coords: BTreeMap::new(),
            odd: false,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// `⟨δ_x, Ω(f)⟩ = δ_x(f)`.
    pub fn pair(&self, x: &DoubleElement) -> RadicalScalar {
        let mut acc = RadicalScalar::zero();
        for (g, c) in &self.coords {
            let v = match g.kind() {
                Kind::Y | Kind::X => x.a.get(g.i(), g.j()),
                Kind::Z => x.b.get(g.i(), g.j()),
            };
            if !v.is_zero() {
                acc += &(v * c);
            }
        }
        acc
    }

    /// Coordinates on `(Ω(f_k))` and `(Ω(g_k))`, read off against `δ_T` and `δ_t`.
    pub fn components(&self, b: &DoubleBasis) -> (Vec<RadicalScalar>, Vec<RadicalScalar>) {
        (
            b.big_t.iter().map(|x| self.pair(x)).collect(),
            b.small_t.iter().map(|x| self.pair(x)).collect(),
        )
    }

    /// Equality in `Kerε/(Kerε)²` of the special linear group: the
    /// supertrace directions pair to zero with the whole double.
    pub fn same_class(&self, o: &Self, b: &DoubleBasis) -> bool {
        self.components(b) == o.components(b)
    }

    /// The linear representative `Σ c_g g`.
    pub fn representative(&self, degree: u8) -> SuperPoly {
        let mut p = SuperPoly::zero(degree);
        for (g, c) in &self.coords {
            p.add_scaled(&SuperPoly::gen(*g, degree), c);
        }
        p
    }
}

impl fmt::Display for CotangentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return f.write_str("0");
        }
        for (k, (g, c)) in self.coords.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c} * {g}")?;
        }
        Ok(())
    }
}

pub fn omega(f: &SuperPoly) -> Result<CotangentVector> {
    let e = f.constant_term();
    if !e.is_zero() {
        return Err(Error::NotInKernel(e.to_string()));
    }
    let coords: BTreeMap<Gen, RadicalScalar> = f.linear_part().into_iter().filter(|(_, c)| !c.is_zero()).collect();
    let mut odd = None;
    for g in coords.keys() {
        match odd {
            None => odd = Some(g.odd()),
            Some(o) if o != g.odd() => return Err(Error::InhomogeneousOperand),
            _ => {}
        }
    }
    Ok(CotangentVector {
        coords,
        odd: odd.unwrap_or(false),
    })
}

/// `[Ω(f), Ω(g)] = Ω({f, g})`.
pub fn induced_bracket(br: &Bracket, f: &SuperPoly, g: &SuperPoly) -> Result<CotangentVector> {
    for p in [f, g] {
        let e = p.constant_term();
        if !e.is_zero() {
            return Err(Error::NotInKernel(e.to_string()));
        }
    }
    omega(&br.apply(f, g)?)
}

/// `φ(Ω(f)) = Ω(f⋆)`.
pub fn real_structure_on_dual(h: &HopfAlgebra, f: &SuperPoly) -> Result<CotangentVector> {
    let e = f.constant_term();
    if !e.is_zero() {
        return Err(Error::NotInKernel(e.to_string()));
    }
    omega(&h.star(f))
}

/// Linear functional `x ↦ (x, y)_d` as a Kerε representative.
pub fn functional(shape: BlockShape, y: &DoubleElement, degree: u8) -> SuperPoly {
    let half_i = RadicalScalar::i() * RadicalScalar::from_frac(1, 2);
    let mut p = SuperPoly::zero(degree);
    for g in double_generators(shape) {
        let (k, l) = (g.i(), g.j());
        let (entry, s) = match g.kind() {
            Kind::Y | Kind::X => (y.a.get(l, k), -&half_i),
            Kind::Z => (y.b.get(l, k), half_i.clone()),
        };
        if !entry.is_zero() {
            p.add_scaled(&SuperPoly::gen(g, degree), &(&(entry * &s) * &sign(shape.is_odd_index(k))));
        }
    }
    p
}

/// The families `f_i` (dual to `δ_T`) and `g_i` (dual to `δ_t`).
#[derive(Clone, Debug)]
pub struct DualFamilies {
    pub f: Vec<SuperPoly>,
    pub g: Vec<SuperPoly>,
}

impl DualFamilies {
    /// The families as displayed, with `H_0* = ((n−m)/(n+m)) H_0`.
    pub fn displayed(h: &HopfAlgebra, b: &DoubleBasis) -> Self {
        let sh = b.shape();
        let d = h.degree();
        let (m, n) = (sh.m() as i64, sh.n() as i64);
        let half = RadicalScalar::from_frac(1, 2);
        let i_half = RadicalScalar::i() * &half;
        let mut f = Vec::new();
        let mut g = Vec::new();
        for v in &b.sl.vectors {
            let x = if v.label.kind == BasisKind::H0 {
                v.matrix.scale(&RadicalScalar::from_frac(n - m, n + m))
            } else {
                v.matrix.clone()
            };
            let mut fp = SuperPoly::zero(d);
            let cartan = matches!(v.label.kind, BasisKind::H | BasisKind::HTilde | BasisKind::H0);
            for (k, l, c) in x.support() {
                if cartan {
                    let s_u = h.antipode(&h.u(Kind::Y, k, k));
                    let term = &s_u - &h.u(Kind::Z, k, k);
                    fp.add_scaled(&term, &(-&(c * &half)));
                } else {
                    let kind = if v.label.s < v.label.t { Kind::Y } else { Kind::Z };
                    fp.add_scaled(&h.u(kind, k, l), c);
                }
            }
            f.push(fp);
            let positive = v.label.s < v.label.t;
            let coeff = match v.label.kind {
                BasisKind::E | BasisKind::H | BasisKind::H0 => -&i_half,
                BasisKind::V if positive => -&i_half,
                _ => i_half.clone(),
            };
            let mut gp = SuperPoly::zero(d);
            for (k, l, c) in x.support() {
                let a = c * &coeff;
                gp.add_scaled(&h.u(Kind::Y, k, l), &a);
                gp.add_scaled(&h.u(Kind::Z, k, l), &-&a);
            }
            g.push(gp);
        }
        Self { f, g }
    }

    /// Families obtained by inverting the pairing: `f_j ↔ (·, t_j)`,
    /// `g_j ↔ (·, (−1)^{|j|} T_j)`.
    pub fn corrected(b: &DoubleBasis, degree: u8) -> Self {
        let sh = b.shape();
        let n = b.len();
        Self {
            f: (0..n).map(|j| functional(sh, &b.dual(Side::T(j)), degree)).collect(),
            g: (0..n).map(|j| functional(sh, &b.dual(Side::Small(j)), degree)).collect(),
        }
    }

    /// Kronecker check of the pairing with `(δ_T, δ_t)`; one cell per entry.
    pub fn validate(&self, b: &DoubleBasis) -> Vec<Cell> {
        let mut out = Vec::new();
        for (fam, list, dual_side) in [("f", &self.f, true), ("g", &self.g, false)] {
            for (j, p) in list.iter().enumerate() {
                let w = match omega(p) {
                    Ok(w) => w,
                    Err(e) => {
                        out.push(Err(Witness::new("family member in Ker eps", vec![format!("{fam}[{}]", j + 1)], e)));
                        continue;
                    }
                };
                let (on_t, on_small) = w.components(b);
                for (i, (a, s)) in on_t.iter().zip(&on_small).enumerate() {
                    let (want_t, want_s) = if dual_side { (i == j, false) } else { (false, i == j) };
                    for (side, got, want) in [(Side::T(i), a, want_t), (Side::Small(i), s, want_s)] {
                        let ok = if want { got.is_one() } else { got.is_zero() };
                        out.push(if ok {
                            Ok(())
                        } else {
                            Err(Witness::new(
                                "<delta, Omega(family)> = delta_ij",
                                vec![b.label(side), format!("{fam}[{}]", j + 1)],
                                got,
                            ))
                        });
                    }
                }
            }
        }
        out
    }
}

fn i_pow(odd: bool) -> RadicalScalar {
    if odd {
        RadicalScalar::i()
    } else {
        RadicalScalar::one()
    }
}

fn vec_cell(check: &str, inputs: Vec<String>, got: &[RadicalScalar], want: &[RadicalScalar]) -> Cell {
    match got.iter().zip(want).position(|(a, b)| a != b) {
        None => Ok(()),
        Some(k) => Err(Witness::new(check, inputs, format!("component {}: {}", k + 1, &got[k] - &want[k]))),
    }
}

fn zeros(n: usize) -> Vec<RadicalScalar> {
    vec![RadicalScalar::zero(); n]
}

/// `T(ω) = Σ_k ⟨δ_{T_k}, ω⟩ i^{−|k|} t_k` on `G*`.
fn transport_t(b: &DoubleBasis, w: &CotangentVector) -> DoubleElement {
    let (on_t, _) = w.components(b);
    let coeffs: Vec<RadicalScalar> =
        on_t.iter().enumerate().map(|(k, c)| c * &i_pow(b.odd(k)).conj()).collect();
    b.reconstruct(&zeros(b.len()), &coeffs)
}

/// `S(ω) = Σ_k ⟨δ_{t_k}, ω⟩ (−1)^{|k|+1} T_k` on `B*`.
fn transport_s(b: &DoubleBasis, w: &CotangentVector) -> DoubleElement {
    let (_, on_small) = w.components(b);
    let coeffs: Vec<RadicalScalar> = on_small.iter().enumerate().map(|(k, c)| -&(c * &sign(b.odd(k)))).collect();
    b.reconstruct(&coeffs, &zeros(b.len()))
}

/// `S'(ω) = Σ_k ⟨δ_{t_k}, ω⟩ (−1)^{|k|+1} i^{−|k|} T_k`, the isomorphism
/// for `𝔤'_a = i^{|a|} (−1)^{|a|+1} g_a`.
fn transport_s_prime(b: &DoubleBasis, w: &CotangentVector) -> DoubleElement {
    let (_, on_small) = w.components(b);
    let coeffs: Vec<RadicalScalar> = on_small
        .iter()
        .enumerate()
        .map(|(k, c)| -&(&(c * &sign(b.odd(k))) * &i_pow(b.odd(k)).conj()))
        .collect();
    b.reconstruct(&coeffs, &zeros(b.len()))
}

fn lie(x: &DoubleElement, y: &DoubleElement) -> DoubleElement {
    x.bracket(y).expect("basis elements are homogeneous")
}

fn fam_label(fam: &str, i: usize) -> String {
    format!("{fam}[{}]", i + 1)
}

/// Everything of the duality theorem that is checkable at one truncation.
pub fn verify_duality(b: &DoubleBasis, h: &HopfAlgebra) -> Result<SuiteResult> {
    let mut out = SuiteResult::new("duality");
    let d = h.degree();
    let n = b.len();
    let shown = DualFamilies::displayed(h, b);
    let failures: Vec<Witness> = shown.validate(b).into_iter().filter_map(|c| c.err()).collect();
    let fam = DualFamilies::corrected(b, d);
    if failures.is_empty() {
        out.note("displayed f/g families are dual to (T, t)");
    } else {
        let mut bad: Vec<String> = failures.iter().map(|w| w.inputs[1].clone()).collect();
        bad.dedup();
        out.note(format!(
            "displayed families fail the duality check at {} entries (members {}); first: <{}, Omega({})> = {}",
            failures.len(),
            bad.join(", "),
            failures[0].inputs[0],
            failures[0].inputs[1],
            failures[0].defect
        ));
        for name in &bad {
            let (list, k) = match name.as_bytes()[0] {
                b'f' => (&fam.f, name[2..name.len() - 1].parse::<usize>().unwrap_or(1) - 1),
                _ => (&fam.g, name[2..name.len() - 1].parse::<usize>().unwrap_or(1) - 1),
            };
            out.note(format!("corrected {name} = {}", list[k]));
        }
    }
    out.record_all(fam.validate(b));
    out.note("S with the displayed rescaling (-1)^(|a|+1) satisfies S[x,y] = (-1)^(|x||y|)[Sx,Sy]; S' = S with an extra i^|a| is a Lie superalgebra isomorphism and carries phi to phi, while S carries phi to the K-twist");

    let br = Bracket::sum(b, d)?;
    let wf: Vec<CotangentVector> = fam.f.iter().map(omega).collect::<Result<_>>()?;
    let wg: Vec<CotangentVector> = fam.g.iter().map(omega).collect::<Result<_>>()?;
    let ff = pair_table(&br, &fam.f, &fam.f)?;
    let gg = pair_table(&br, &fam.g, &fam.g)?;
    let fg = pair_table(&br, &fam.f, &fam.g)?;

    for i in 0..n {
        for j in 0..n {
            let (oi, oj) = (b.odd(i), b.odd(j));
            let xs = vec![fam_label("f", i), fam_label("f", j)];
            let lt = lie(&b.small_t[i], &b.small_t[j]);
            let want: Vec<RadicalScalar> =
                b.big_t.iter().map(|t| &sp_double(t, &lt) * &sign(oi && oj)).collect();
            let (on_t, on_small) = ff[i][j].components(b);
            out.record(vec_cell("[Omega f_i, Omega f_j] on G*", xs.clone(), &on_t, &want));
            out.record(vec_cell("[Omega f_i, Omega f_j] has no B* part", xs, &on_small, &zeros(n)));

            let xs = vec![fam_label("g", i), fam_label("g", j)];
            let lt = lie(&b.big_t[i], &b.big_t[j]);
            let want: Vec<RadicalScalar> =
                b.small_t.iter().map(|t| -&(&sp_double(&lt, t) * &sign(oi && oj))).collect();
            let (on_t, on_small) = gg[i][j].components(b);
            out.record(vec_cell("[Omega g_i, Omega g_j] on B*", xs.clone(), &on_small, &want));
            out.record(vec_cell("[Omega g_i, Omega g_j] has no G* part", xs, &on_t, &zeros(n)));

            let xs = vec![fam_label("f", i), fam_label("g", j)];
            let (on_t, on_small) = fg[i][j].components(b);
            out.record(vec_cell("[Omega f_i, Omega g_j] = 0", xs.clone(), &on_t, &zeros(n)));
            out.record(vec_cell("[Omega f_i, Omega g_j] = 0", xs, &on_small, &zeros(n)));

            // T: Ω(𝔣_a) ↦ t_a and S: Ω(𝔤_a) ↦ T_a on brackets
            let scale_f = &i_pow(oi) * &i_pow(oj);
            let t_img = transport_t(b, &scaled(&ff[i][j], &scale_f));
            out.record(diff_cell(b, "T[f_a, f_b] = [t_a, t_b]", vec![fam_label("F", i), fam_label("F", j)], &t_img, &lie(&b.small_t[i], &b.small_t[j])));
            // the displayed rescaling of g only intertwines up to (−1)^{|a||b|};
            // the extra i^{|a|} of S' removes it
            let xs = vec![fam_label("G", i), fam_label("G", j)];
            let lt = lie(&b.big_t[i], &b.big_t[j]);
            let scale_g = &sign(!oi) * &sign(!oj);
            let s_img = transport_s(b, &scaled(&gg[i][j], &scale_g));
            out.record(diff_cell(b, "S[g_a, g_b] = (-1)^|a||b| [T_a, T_b]", xs.clone(), &s_img, &lt.scale(&sign(oi && oj))));
            let s_img = transport_s_prime(b, &scaled(&gg[i][j], &(&scale_g * &scale_f)));
            out.record(diff_cell(b, "S'[g'_a, g'_b] = [T_a, T_b]", xs, &s_img, &lt));
        }
    }
    // the transports send basis to basis
    for a in 0..n {
        let fa = scaled(&wf[a], &i_pow(b.odd(a)));
        out.record(diff_cell(b, "T(Omega f_a) = t_a", vec![fam_label("F", a)], &transport_t(b, &fa), &b.small_t[a]));
        let ga = scaled(&wg[a], &-&sign(b.odd(a)));
        out.record(diff_cell(b, "S(Omega g_a) = T_a", vec![fam_label("G", a)], &transport_s(b, &ga), &b.big_t[a]));
        let ga = scaled(&ga, &i_pow(b.odd(a)));
        out.record(diff_cell(b, "S'(Omega g'_a) = T_a", vec![fam_label("G", a)], &transport_s_prime(b, &ga), &b.big_t[a]));
    }

    // well-definedness under (Kerε)² perturbations
    let sh = b.shape();
    let cells: Vec<Vec<Cell>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut cells = Vec::new();
            let q = perturbation(sh, b.odd(i), d);
            for (fam_name, list, base) in [("f", &fam.f, &ff), ("g", &fam.g, &gg)] {
                let p = &list[i] + &q;
                for j in 0..n {
                    let got = induced_bracket(&br, &p, &list[j]).map(|w| w.same_class(&base[i][j], b));
                    cells.push(match got {
                        Ok(true) => Ok(()),
                        Ok(false) => Err(Witness::new(
                            "bracket independent of representative",
                            vec![fam_label(fam_name, i), fam_label(fam_name, j)],
                            "class changed",
                        )),
                        Err(e) => Err(Witness::new("bracket independent of representative", vec![fam_label(fam_name, i)], e)),
                    });
                }
            }
            cells
        })
        .collect();
    out.record_all(cells.into_iter().flatten());

    // real structure on the dual and its transports
    let i = RadicalScalar::i();
    for a in 0..n {
        let oa = b.odd(a);
        for (fam_name, p, w) in [("f", &fam.f[a], &wf[a]), ("g", &fam.g[a], &wg[a])] {
            let xs = vec![fam_label(fam_name, a)];
            let once = real_structure_on_dual(h, p)?;
            let twice = real_structure_on_dual(h, &once.representative(d))?;
            let want = if oa { scaled(w, &-RadicalScalar::one()) } else { w.clone() };
            out.check(twice.same_class(&want, b), || Witness::new("phi^2 = (-1)^|a| on the dual", xs.clone(), &twice));
            let (on_t, on_small) = once.components(b);
            let stray = if fam_name == "f" { on_small } else { on_t };
            out.record(vec_cell("phi preserves G* and B*", xs.clone(), &stray, &zeros(n)));
            let anti = real_structure_on_dual(h, &p.scale(&i))?;
            out.check(anti.same_class(&scaled(&once, &-&i), b), || Witness::new("phi antilinear on the dual", xs.clone(), &anti));
        }
        let fa = fam.f[a].scale(&i_pow(oa));
        let lhs = transport_t(b, &real_structure_on_dual(h, &fa)?);
        let rhs = phi_double(&b.small_t[a])?;
        out.record(diff_cell(b, "T phi T^-1 = phi", vec![fam_label("F", a)], &lhs, &rhs));
        let ga = fam.g[a].scale(&-sign(oa));
        let lhs = transport_s(b, &real_structure_on_dual(h, &ga)?);
        let rhs = k_twist(&b.big_t[a])?;
        out.record(diff_cell(b, "S phi S^-1 = K phi K^-1", vec![fam_label("G", a)], &lhs, &rhs));
        let ga = fam.g[a].scale(&-&(&sign(oa) * &i_pow(oa)));
        let lhs = transport_s_prime(b, &real_structure_on_dual(h, &ga)?);
        let rhs = phi_double(&b.big_t[a])?;
        out.record(diff_cell(b, "S' phi S'^-1 = phi", vec![fam_label("G", a)], &lhs, &rhs));
    }
    Ok(out)
}

fn scaled(w: &CotangentVector, c: &RadicalScalar) -> CotangentVector {
    let coords = w
        .coords
        .iter()
        .map(|(g, v)| (*g, v * c))
        .filter(|(_, v)| !v.is_zero())
        .collect();
    CotangentVector { coords, odd: w.odd }
}

fn diff_cell(b: &DoubleBasis, check: &str, inputs: Vec<String>, got: &DoubleElement, want: &DoubleElement) -> Cell {
    let dlt = got.sub(want);
    if dlt.is_zero() {
        Ok(())
    } else {
        let (x, y) = b.coords(&dlt);
        let first = x.iter().chain(&y).find(|c| !c.is_zero()).cloned().unwrap_or_default();
        Err(Witness::new(check, inputs, first))
    }
}

/// An element of `(Kerε)²` with the requested parity.
fn perturbation(sh: BlockShape, odd: bool, d: u8) -> SuperPoly {
    let a = SuperPoly::gen(Gen::new(sh, Kind::Y, 0, 0), d);
    let c = if odd { Gen::new(sh, Kind::Z, 0, sh.m()) } else { Gen::new(sh, Kind::Z, 0, 0) };
    &a * &SuperPoly::gen(c, d)
}

fn pair_table(br: &Bracket, xs: &[SuperPoly], ys: &[SuperPoly]) -> Result<Vec<Vec<CotangentVector>>> {
    xs.par_iter()
        .map(|x| ys.iter().map(|y| induced_bracket(br, x, y)).collect::<Result<Vec<_>>>())
        .collect()
}

/// Structure constants of `G*` on `Ω(f_k)` and of `B*` on `Ω(g_k)`, tagged
/// `g-star` and `b-star`.
pub fn induced_constants(b: &DoubleBasis, degree: u8) -> Result<Vec<StructureConstant>> {
    let fam = DualFamilies::corrected(b, degree);
    let br = Bracket::sum(b, degree)?;
    let mut out = Vec::new();
    for (tag, list, on_f) in [("g-star", &fam.f, true), ("b-star", &fam.g, false)] {
        let table = pair_table(&br, list, list)?;
        for (i, row) in table.iter().enumerate() {
            for (j, w) in row.iter().enumerate() {
                let (on_t, on_small) = w.components(b);
                let coeffs = if on_f { on_t } else { on_small };
                for (k, c) in coeffs.into_iter().enumerate() {
                    if !c.is_zero() {
                        out.push(StructureConstant {
                            basis: tag,
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
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::build_double_basis;

    fn setup(m: usize, n: usize, d: u8) -> (DoubleBasis, HopfAlgebra) {
        let sh = BlockShape::new(m, n).unwrap();
        (build_double_basis(sh).unwrap(), HopfAlgebra::new(sh, d))
    }

    #[test]
    fn omega_examples() {
        let (_, h) = setup(2, 1, 3);
        let sq = &h.gen(Kind::Y, 0, 1) * &h.gen(Kind::Y, 1, 0);
        assert!(omega(&sq).unwrap().is_zero());
        let p = &h.antipode(&h.u(Kind::Y, 0, 0)) - &h.u(Kind::Z, 0, 0);
        let w = omega(&p).unwrap();
        let want: BTreeMap<Gen, RadicalScalar> = [(Kind::Y, -1), (Kind::Z, -1)]
            .into_iter()
            .map(|(k, c)| (Gen::new(h.shape(), k, 0, 0), RadicalScalar::from_int(c)))
            .collect();
        assert_eq!(w.coords, want);
        assert!(matches!(omega(&h.u(Kind::Y, 0, 0)), Err(Error::NotInKernel(_))));
    }

    #[test]
    fn corrected_families_are_dual() {
        for (m, n) in [(2, 1), (1, 2)] {
            let (b, _) = setup(m, n, 2);
            let fam = DualFamilies::corrected(&b, 2);
            assert!(fam.validate(&b).iter().all(|c| c.is_ok()));
        }
    }

    #[test]
    fn suite_passes_small_shapes() {
        for (m, n) in [(2, 1), (1, 2)] {
            let (b, h) = setup(m, n, 3);
            let r = verify_duality(&b, &h).unwrap();
            assert!(r.ok(), "({m},{n}) {:?} {:?}", r.witness, r.notes);
        }
    }
}

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::calculus::{tensor_eval, Hand, Nabla};
use crate::error::Result;
use crate::hopf::verify::{i_generators, j_generators, verify_quotients};
use crate::hopf::{double_generators, Gen, HopfAlgebra, Kind, Monomial, SuperPoly, TensorPoly};
use crate::liealg::{DoubleBasis, Side};
use crate::linalg::{in_rational_span, rational_entry};
use crate::report::{Cell, SuiteResult, Witness};
use crate::scalar::{sign, RadicalScalar};
use crate::supermatrix::{sp_sl, BlockShape, DoubleElement, SuperMatrix};

use super::bracket::{Bracket, RMatrixTable};

/// Shared knobs for the bracket suites.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub degree: u8,
    pub seed: u64,
    /// Sample size for pair/triple suites on shapes with `m + n >= 4`.
    pub samples: usize,
}

impl SuiteConfig {
    pub fn new(degree: u8, seed: u64) -> Self {
        Self {
            degree,
            seed,
            samples: 50,
        }
    }
}

fn exhaustive(sh: BlockShape) -> bool {
    sh.size() <= 3
}

fn sample_tuples<const K: usize>(n: usize, count: usize, seed: u64) -> Vec<[usize; K]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| std::array::from_fn(|_| rng.gen_range(0..n))).collect()
}

fn all_pairs(n: usize) -> Vec<[usize; 2]> {
    (0..n).flat_map(|i| (0..n).map(move |j| [i, j])).collect()
}

fn all_triples(n: usize) -> Vec<[usize; 3]> {
    (0..n).flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| [i, j, k]))).collect()
}

fn pairs_for(sh: BlockShape, n: usize, cfg: &SuiteConfig) -> Vec<[usize; 2]> {
    if exhaustive(sh) {
        all_pairs(n)
    } else {
        sample_tuples(n, cfg.samples, cfg.seed)
    }
}

fn triples_for(sh: BlockShape, n: usize, cfg: &SuiteConfig) -> Vec<[usize; 3]> {
    if exhaustive(sh) {
        all_triples(n)
    } else {
        sample_tuples(n, cfg.samples, cfg.seed)
    }
}

fn eq_cell(check: &str, inputs: Vec<String>, lhs: &SuperPoly, rhs: &SuperPoly) -> Cell {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Witness::new(check, inputs, lhs - rhs))
    }
}

fn zero_cell(check: &str, inputs: Vec<String>, defect: &SuperPoly) -> Cell {
    if defect.is_zero() {
        Ok(())
    } else {
        Err(Witness::new(check, inputs, defect))
    }
}

fn br(b: &Bracket, f: &SuperPoly, g: &SuperPoly) -> SuperPoly {
    b.apply(f, g).expect("generator brackets have homogeneous operands")
}

fn par(f: &SuperPoly) -> bool {
    f.parity().bit().expect("homogeneous")
}

fn jacobi_from(b: &Bracket, f: &SuperPoly, g: &SuperPoly, h: &SuperPoly, gh: &SuperPoly, hf: &SuperPoly, fg: &SuperPoly) -> SuperPoly {
    let (pf, pg, ph) = (par(f), par(g), par(h));
    let mut out = br(b, f, gh).scale(&sign(pf && ph));
    out.add_scaled(&br(b, g, hf), &sign(pg && pf));
    out.add_scaled(&br(b, h, fg), &sign(ph && pg));
    out
}

/// `(−1)^{|f||h|}{f,{g,h}} + (−1)^{|g||f|}{g,{h,f}} + (−1)^{|h||g|}{h,{f,g}}`.
pub fn jacobi_defect(b: &Bracket, f: &SuperPoly, g: &SuperPoly, h: &SuperPoly) -> Result<SuperPoly> {
    let gh = b.apply(g, h)?;
    let hf = b.apply(h, f)?;
    let fg = b.apply(f, g)?;
    Ok(jacobi_from(b, f, g, h, &gh, &hf, &fg))
}

/// Superantisymmetry on pairs, super-Leibniz and super-Jacobi on triples.
pub fn verify_jacobi(basis: &DoubleBasis, cfg: &SuiteConfig) -> SuiteResult {
    let mut out = SuiteResult::new("jacobi");
    let sh = basis.shape();
    let d = cfg.degree.max(3);
    let b = Bracket::sum(basis, d).expect("basis elements are homogeneous");
    let gens = double_generators(sh);
    let polys: Vec<SuperPoly> = gens.iter().map(|&g| SuperPoly::gen(g, d)).collect();
    let n = gens.len();
    let triples = triples_for(sh, n, cfg);
    if !exhaustive(sh) {
        out.note(format!("{} seeded triples (seed {})", triples.len(), cfg.seed));
    }

    let cache: Vec<SuperPoly> = all_pairs(n).into_par_iter().map(|[i, j]| br(&b, &polys[i], &polys[j])).collect();
    let pair = |i: usize, j: usize| &cache[i * n + j];

    let cells: Vec<Cell> = all_pairs(n)
        .into_par_iter()
        .filter(|[i, j]| i <= j)
        .map(|[i, j]| {
            let s = sign(gens[i].odd() && gens[j].odd());
            let mut defect = pair(i, j).clone();
            defect.add_scaled(pair(j, i), &s);
            zero_cell("{f,g} + (-1)^{|f||g|}{g,f} = 0", vec![gens[i].to_string(), gens[j].to_string()], &defect)
        })
        .collect();
    out.record_all(cells);

    let cells: Vec<Vec<Cell>> = triples
        .par_iter()
        .map(|&[i, j, k]| {
            let (f, g, h) = (&polys[i], &polys[j], &polys[k]);
            let names = || vec![gens[i].to_string(), gens[j].to_string(), gens[k].to_string()];
            let defect = jacobi_from(&b, f, g, h, pair(j, k), pair(k, i), pair(i, j));
            let mut cells = vec![zero_cell("super-Jacobi", names(), &defect)];
            let gh = g * h;
            if !gh.is_zero() {
                let lhs = br(&b, f, &gh);
                let mut rhs = pair(i, j) * h;
                rhs.add_scaled(&(g * pair(i, k)), &sign(gens[i].odd() && gens[j].odd()));
                cells.push(eq_cell("{f,gh} = {f,g}h + (-1)^{|f||g|}g{f,h}", names(), &lhs, &rhs));
            }
            cells
        })
        .collect();
    out.record_all(cells.into_iter().flatten());
    out
}

/// `{f1⊗f2, g1⊗g2} = (−1)^{|f2||g1|}({f1,g1}⊗f2g2 + f1g1⊗{f2,g2})`.
pub fn tensor_bracket(b: &Bracket, x: &TensorPoly, y: &TensorPoly) -> Result<TensorPoly> {
    let d = b.degree();
    let mut cache: FxHashMap<(Monomial, Monomial), SuperPoly> = FxHashMap::default();
    let mono = |m: &Monomial| SuperPoly::monomial(*m, RadicalScalar::one(), d);
    let mut out = TensorPoly::zero(2, d);
    for (kx, cx) in x.terms() {
        for (ky, cy) in y.terms() {
            let c = &(cx * cy) * &sign(kx[1].odd() && ky[0].odd());
            let mut bracket = |p: &Monomial, q: &Monomial| -> Result<SuperPoly> {
                if p.is_one() || q.is_one() {
                    return Ok(SuperPoly::zero(d));
                }
                if let Some(v) = cache.get(&(*p, *q)) {
                    return Ok(v.clone());
                }
                let v = b.apply(&mono(p), &mono(q))?;
                cache.insert((*p, *q), v.clone());
                Ok(v)
            };
            let first = bracket(&kx[0], &ky[0])?;
            if !first.is_zero() {
                let rest = &mono(&kx[1]) * &mono(&ky[1]);
                out = out.add(&TensorPoly::pure(&[&first, &rest]).scale(&c));
            }
            let second = bracket(&kx[1], &ky[1])?;
            if !second.is_zero() {
                let head = &mono(&kx[0]) * &mono(&ky[0]);
                out = out.add(&TensorPoly::pure(&[&head, &second]).scale(&c));
            }
        }
    }
    Ok(out)
}

/// `Δ{f,g} − {Δf, Δg}`; `h` and `b` must share a truncation.
pub fn coproduct_morphism_defect(h: &HopfAlgebra, b: &Bracket, f: &SuperPoly, g: &SuperPoly) -> Result<TensorPoly> {
    let lhs = h.coproduct(&b.apply(f, g)?);
    let rhs = tensor_bracket(b, &h.coproduct(f), &h.coproduct(g))?;
    Ok(lhs.sub(&rhs))
}

pub fn verify_coproduct_morphism(basis: &DoubleBasis, cfg: &SuiteConfig) -> SuiteResult {
    let mut out = SuiteResult::new("coproduct-morphism");
    let sh = basis.shape();
    // brackets of generator coproducts reach total degree 4
    let d = cfg.degree.max(4);
    let h = HopfAlgebra::new(sh, d);
    let b = Bracket::sum(basis, d).expect("basis elements are homogeneous");
    let gens = double_generators(sh);
    let cells: Vec<Cell> = pairs_for(sh, gens.len(), cfg)
        .into_par_iter()
        .map(|[i, j]| {
            let (f, g) = (SuperPoly::unit_shifted(gens[i], d), SuperPoly::unit_shifted(gens[j], d));
            let defect = coproduct_morphism_defect(&h, &b, &f, &g).expect("homogeneous");
            if defect.is_zero() {
                Ok(())
            } else {
                Err(Witness::new("D{f,g} = {Df, Dg}", vec![gens[i].to_string(), gens[j].to_string()], &defect))
            }
        })
        .collect();
    out.record_all(cells);
    out
}

/// `{f⋆, g⋆} − {f,g}⋆` at the truncation of `h` and `b`; only the part of
/// degree below that truncation is exact.
pub fn star_compat_defect(h: &HopfAlgebra, b: &Bracket, f: &SuperPoly, g: &SuperPoly) -> Result<SuperPoly> {
    let lhs = b.apply(&h.star(f), &h.star(g))?;
    let rhs = h.star(&b.apply(f, g)?);
    Ok(&lhs - &rhs)
}

/// `⋆`-compatibility modulo degree `> t` for each target `t`, working at `t + 1`.
pub fn verify_star_compat(basis: &DoubleBasis, cfg: &SuiteConfig, targets: &[u8]) -> SuiteResult {
    let mut out = SuiteResult::new("star-compat");
    let sh = basis.shape();
    let gens = double_generators(sh);
    let pairs = pairs_for(sh, gens.len(), cfg);
    for &t in targets {
        let w = t + 1;
        let h = HopfAlgebra::new(sh, w);
        let b = Bracket::sum(basis, w).expect("basis elements are homogeneous");
        let polys: Vec<SuperPoly> = gens.iter().map(|&g| SuperPoly::gen(g, w)).collect();
        let stars: Vec<SuperPoly> = polys.par_iter().map(|p| h.star(p)).collect();
        let cells: Vec<Cell> = pairs
            .par_iter()
            .map(|&[i, j]| {
                let lhs = br(&b, &stars[i], &stars[j]);
                let rhs = h.star(&br(&b, &polys[i], &polys[j]));
                let defect = (&lhs - &rhs).with_degree(t);
                zero_cell(
                    &format!("{{f*, g*}} = {{f,g}}* mod degree > {t}"),
                    vec![gens[i].to_string(), gens[j].to_string()],
                    &defect,
                )
            })
            .collect();
        out.record_all(cells);
        out.note(format!("checked modulo degree > {t} at working truncation {w}"));
    }
    out
}

/// Poisson-ideal property of `I` (exact) and `J` (modulo degree `> D`),
/// `∇`-stability, quotient well-definedness, plus the Hopf-ideal checks.
pub fn verify_ideals(basis: &DoubleBasis, cfg: &SuiteConfig) -> SuiteResult {
    let mut out = SuiteResult::new("ideals");
    let sh = basis.shape();
    let d = cfg.degree;
    let w = d + 1;
    let hw = HopfAlgebra::new(sh, w);
    let bw = Bracket::sum(basis, w).expect("basis elements are homogeneous");
    let gens = &double_generators(sh);
    let polys = &gens.iter().map(|&g| SuperPoly::gen(g, w)).collect::<Vec<_>>();
    let bw = &bw;

    let igens = i_generators(&hw);
    let jgens = j_generators(&hw);
    let pi = |f: &SuperPoly| hw.project_i(f);
    let pj = |f: &SuperPoly| hw.project_j(f);

    for (which, ideal, exact) in [("I", &igens, true), ("J", &jgens, false)] {
        let proj = |f: &SuperPoly| if exact { pi(f) } else { pj(f) };
        let trunc = |f: SuperPoly| if exact { f } else { f.with_degree(d) };
        let cells: Vec<Cell> = ideal
            .par_iter()
            .flat_map_iter(|(name, p)| {
                let proj = &proj;
                let trunc = &trunc;
                gens.iter().zip(polys).map(move |(g, q)| {
                    let v = trunc(proj(&br(bw, p, q)));
                    zero_cell(&format!("project_{which}({{p, q}}) = 0"), vec![name.clone(), g.to_string()], &v)
                })
            })
            .collect();
        out.record_all(cells);

        // ∇_{T_i} preserves I, ∇_{t_i} preserves J
        let sides: Vec<Side> = basis
            .sides()
            .filter(|s| matches!(s, Side::T(_)) == exact)
            .collect();
        let cells: Vec<Cell> = sides
            .par_iter()
            .flat_map_iter(|&s| {
                let x = basis.get(s);
                let ops = [Hand::Left, Hand::Right].map(|hand| Nabla::new(hand, x, w).expect("homogeneous"));
                let proj = &proj;
                let trunc = &trunc;
                ideal
                    .iter()
                    .flat_map(|(name, p)| {
                        ops.iter()
                            .map(|op| {
                                let v = trunc(proj(&op.apply(p)));
                                zero_cell(
                                    &format!("{:?} derivation preserves {which}", op.hand()),
                                    vec![basis.label(s), name.clone()],
                                    &v,
                                )
                            })
                            .collect::<Vec<_>>()
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        out.record_all(cells);

        // project({f + p r, g}) = project({f, g}), with f of the parity of p
        let last = sh.size() - 1;
        let r = SuperPoly::gen(Gen::y(sh, 0, 0), w);
        let cells: Vec<Cell> = ideal
            .par_iter()
            .flat_map_iter(|(name, p)| {
                let fg = if par(p) { Gen::y(sh, 0, last) } else { Gen::y(sh, 0, 0) };
                let f = SuperPoly::gen(fg, w);
                let perturbed = &f + &(p * &r);
                let proj = &proj;
                let trunc = &trunc;
                let name = name.clone();
                gens.iter().zip(polys).map(move |(g, q)| {
                    let lhs = trunc(proj(&br(bw, &perturbed, q)));
                    let rhs = trunc(proj(&br(bw, &f, q)));
                    eq_cell(
                        &format!("bracket well defined on the quotient by {which}"),
                        vec![format!("{fg} + ({name})*y[1,1]"), g.to_string()],
                        &lhs,
                        &rhs,
                    )
                })
            })
            .collect();
        out.record_all(cells);
    }
    out.note(format!("J checks modulo degree > {d} at working truncation {w}"));
    out.absorb(verify_quotients(&HopfAlgebra::new(sh, d)));
    out
}

/// `∇_{T_a}`, `∇_{t_a}` for one hand, plus the gl units and `1` for the
/// closed form.
struct COps {
    big: Vec<Nabla>,
    small: Vec<Nabla>,
    units: Vec<Nabla>,
    one: Nabla,
}

impl COps {
    fn new(basis: &DoubleBasis, hand: Hand, d: u8) -> Self {
        let sh = basis.shape();
        let mk = |x: &DoubleElement| Nabla::new(hand, x, d).expect("homogeneous");
        Self {
            big: basis.big_t.iter().map(mk).collect(),
            small: basis.small_t.iter().map(mk).collect(),
            units: gl_ops(sh, hand, d),
            one: mk(&DoubleElement::diag(&SuperMatrix::identity(sh))),
        }
    }

    /// `Σ_a ∇_{T_a}⊗∇_{t_a} + (−1)^{|a|}∇_{t_a}⊗∇_{T_a}` on `t`, multiplied out.
    fn c(&self, basis: &DoubleBasis, t: &TensorPoly) -> SuperPoly {
        let mut out = SuperPoly::zero(t.degree());
        for (i, (big, small)) in self.big.iter().zip(&self.small).enumerate() {
            out.add_assign(&tensor_eval(&[big, small], t).expect("rank 2"));
            out.add_scaled(&tensor_eval(&[small, big], t).expect("rank 2"), &sign(basis.odd(i)));
        }
        out
    }

    /// `2i(Σ (−1)^{|s|} ∇_{E_st}⊗∇_{E_ts} + 1/(n−m) ∇_1⊗∇_1)` on `t`.
    fn closed(&self, sh: BlockShape, t: &TensorPoly) -> SuperPoly {
        let s = sh.size();
        let mut out = SuperPoly::zero(t.degree());
        for a in 0..s {
            for c in 0..s {
                let v = tensor_eval(&[&self.units[a * s + c], &self.units[c * s + a]], t).expect("rank 2");
                out.add_scaled(&v, &sign(sh.is_odd_index(a)));
            }
        }
        let diff = sh.n() as i64 - sh.m() as i64;
        out.add_scaled(&tensor_eval(&[&self.one, &self.one], t).expect("rank 2"), &RadicalScalar::from_frac(1, diff));
        out.scale(&RadicalScalar::i().scale_int(2))
    }
}

fn gl_ops(sh: BlockShape, hand: Hand, d: u8) -> Vec<Nabla> {
    let s = sh.size();
    (0..s * s)
        .map(|k| Nabla::new(hand, &DoubleElement::diag(&SuperMatrix::unit(sh, k / s, k % s)), d).expect("units are homogeneous"))
        .collect()
}

/// `C^R = C^L` on all generator pairs, its closed form, and agreement of the
/// two bracket forms and of two dual systems (sampled pairs on large shapes).
pub fn verify_c_operator(basis: &DoubleBasis, cfg: &SuiteConfig) -> SuiteResult {
    let mut out = SuiteResult::new("c-operator");
    let sh = basis.shape();
    let d = cfg.degree.max(2);
    let gens = double_generators(sh);
    let pairs = pairs_for(sh, gens.len(), cfg);

    let right = COps::new(basis, Hand::Right, d);
    let left = COps::new(basis, Hand::Left, d);
    let cells: Vec<Vec<Cell>> = all_pairs(gens.len())
        .par_iter()
        .map(|&[i, j]| {
            let (p, q) = (SuperPoly::unit_shifted(gens[i], d), SuperPoly::unit_shifted(gens[j], d));
            let t = TensorPoly::pure(&[&p, &q]);
            let names = || vec![gens[i].to_string(), gens[j].to_string()];
            let cr = right.c(basis, &t);
            let cl = left.c(basis, &t);
            let mut cells = vec![eq_cell("C^R = C^L", names(), &cr, &cl)];
            // C = C_u − C_w: the closed form acts on u⊗u, minus it on w⊗w
            let (ku, kv) = (gens[i].kind(), gens[j].kind());
            for (hand, ops, c) in [(Hand::Right, &right, &cr), (Hand::Left, &left, &cl)] {
                let want = if ku != kv {
                    SuperPoly::zero(d)
                } else {
                    let v = ops.closed(sh, &t);
                    if ku == Kind::Y {
                        v
                    } else {
                        -&v
                    }
                };
                cells.push(eq_cell(&format!("{hand:?} C = closed form with 1/(n-m)"), names(), c, &want));
            }
            cells
        })
        .collect();
    out.record_all(cells.into_iter().flatten());

    let standard = RMatrixTable::standard(basis).expect("homogeneous basis");
    let split = RMatrixTable::split(basis).expect("homogeneous basis");
    out.absorb(standard.validate("standard"));
    out.absorb(split.validate("split"));
    let sum = Bracket::sum(basis, d).expect("homogeneous");
    let general = Bracket::general(&standard, d).expect("homogeneous");
    let general_split = Bracket::general(&split, d).expect("homogeneous");
    let results: Vec<(SuperPoly, SuperPoly, SuperPoly)> = pairs
        .par_iter()
        .map(|&[i, j]| {
            let (p, q) = (SuperPoly::unit_shifted(gens[i], d), SuperPoly::unit_shifted(gens[j], d));
            (br(&sum, &p, &q), br(&general, &p, &q), br(&general_split, &p, &q))
        })
        .collect();
    for (&[i, j], (s, g, gs)) in pairs.iter().zip(&results) {
        let names = || vec![gens[i].to_string(), gens[j].to_string()];
        out.record(eq_cell("bracket_general = bracket_sum", names(), g, s));
        out.record(eq_cell("bracket_general independent of the dual system", names(), gs, g));
    }
    if let Some(ratio) = measured_ratio(&results) {
        out.note(format!("bracket_general / bracket_sum = {ratio} on every pair"));
    }
    out
}

/// A single scalar `λ` with `general = λ·sum` on all pairs, if one exists and
/// is not 1.
fn measured_ratio(results: &[(SuperPoly, SuperPoly, SuperPoly)]) -> Option<RadicalScalar> {
    let (s, g, _) = results.iter().find(|(s, g, _)| s != g && !s.is_zero())?;
    let (m, c) = s.terms().next()?;
    let lambda = g.coeff(m).div(c).ok()?;
    results.iter().all(|(s, g, _)| &s.scale(&lambda) == g).then_some(lambda)
}

type Array3 = BTreeMap<[usize; 3], RadicalScalar>;

fn wzw_sl_coefficients(basis: &DoubleBasis) -> Vec<([usize; 3], RadicalScalar)> {
    let duals = &basis.sl.duals;
    let n = duals.len();
    all_triples(n)
        .into_par_iter()
        .filter_map(|[i, j, k]| {
            let c = sp_sl(&duals[i], &duals[j].superbracket(&duals[k]).expect("homogeneous duals"));
            (!c.is_zero()).then_some(([i, j, k], c))
        })
        .collect()
}

fn e_hat(sh: BlockShape, s: usize, t: usize) -> SuperMatrix {
    SuperMatrix::unit(sh, t, s).scale(&(&sign(sh.is_odd_index(s)) * &RadicalScalar::i().scale_int(2)))
}

fn wzw_gl_coefficients(sh: BlockShape) -> Vec<([usize; 3], RadicalScalar)> {
    let s = sh.size();
    let hats: Vec<SuperMatrix> = (0..s * s).map(|k| e_hat(sh, k / s, k % s)).collect();
    all_triples(s * s)
        .into_par_iter()
        .filter_map(|[a, b, c]| {
            let v = sp_sl(&hats[a], &hats[b].superbracket(&hats[c]).expect("units are homogeneous"));
            (!v.is_zero()).then_some(([a, b, c], v))
        })
        .collect()
}

fn add_to(arr: &mut Array3, k: [usize; 3], v: RadicalScalar) {
    let e = arr.entry(k).or_insert_with(RadicalScalar::zero);
    *e += &v;
    if e.is_zero() {
        arr.remove(&k);
    }
}

fn contraction(coefs: &[([usize; 3], RadicalScalar)], ops: &[Nabla], t: &TensorPoly) -> SuperPoly {
    let mut out = SuperPoly::zero(t.degree());
    for ([i, j, k], c) in coefs {
        let v = tensor_eval(&[&ops[*i], &ops[*j], &ops[*k]], t).expect("rank 3");
        out.add_scaled(&v, c);
    }
    out
}

/// Trilinear invariant form in an sl basis against gl matrix units: as arrays
/// in `gl^{⊗3}`, as contracted operators, and the vanishing of `L − R` on
/// same-kind triples.
pub fn verify_wzw(basis: &DoubleBasis, cfg: &SuiteConfig) -> SuiteResult {
    let mut out = SuiteResult::new("wzw");
    let sh = basis.shape();
    let s = sh.size();
    let sl_coefs = wzw_sl_coefficients(basis);
    let gl_coefs = wzw_gl_coefficients(sh);

    let mut lhs = Array3::new();
    let vecs = &basis.sl.vectors;
    for ([i, j, k], c) in &sl_coefs {
        for (a, b, x) in vecs[*i].matrix.support() {
            for (p, q, y) in vecs[*j].matrix.support() {
                let xy = &(c * x) * y;
                for (u, v, z) in vecs[*k].matrix.support() {
                    add_to(&mut lhs, [a * s + b, p * s + q, u * s + v], &xy * z);
                }
            }
        }
    }
    let mut rhs = Array3::new();
    for (k, c) in &gl_coefs {
        add_to(&mut rhs, *k, c.clone());
    }
    let keys: std::collections::BTreeSet<[usize; 3]> = lhs.keys().chain(rhs.keys()).copied().collect();
    let unit = |k: usize| format!("E({},{})", k / s + 1, k % s + 1);
    for k in keys {
        let zero = RadicalScalar::zero();
        let (a, b) = (lhs.get(&k).unwrap_or(&zero), rhs.get(&k).unwrap_or(&zero));
        out.check(a == b, || Witness::new("sl and gl WZW arrays agree", k.iter().map(|&x| unit(x)).collect(), a - b));
    }

    let d = cfg.degree.max(3);
    let gens = double_generators(sh);
    let per_kind = gens.len() / 2;
    let triples: Vec<[Gen; 3]> = if exhaustive(sh) {
        all_triples(per_kind).into_iter().map(|t| t.map(|i| gens[i])).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        (0..cfg.samples)
            .map(|_| {
                let off = if rng.gen_bool(0.5) { per_kind } else { 0 };
                std::array::from_fn(|_| gens[off + rng.gen_range(0..per_kind)])
            })
            .collect()
    };
    if !exhaustive(sh) {
        out.note(format!("{} seeded same-kind triples (seed {})", triples.len(), cfg.seed));
    }
    let sl_ops: Vec<[Nabla; 2]> = basis
        .big_t
        .iter()
        .map(|x| [Hand::Left, Hand::Right].map(|h| Nabla::new(h, x, d).expect("homogeneous")))
        .collect();
    let gl = [gl_ops(sh, Hand::Left, d), gl_ops(sh, Hand::Right, d)];
    let sl = [
        sl_ops.iter().map(|o| o[0].clone()).collect::<Vec<_>>(),
        sl_ops.iter().map(|o| o[1].clone()).collect::<Vec<_>>(),
    ];
    let cells: Vec<Vec<Cell>> = triples
        .par_iter()
        .map(|tr| {
            let ps = tr.map(|g| SuperPoly::unit_shifted(g, d));
            let t = TensorPoly::pure(&[&ps[0], &ps[1], &ps[2]]);
            let names = || tr.iter().map(|g| g.to_string()).collect::<Vec<_>>();
            let mut cells = Vec::new();
            let mut gl_vals = Vec::new();
            for (k, hand) in [Hand::Left, Hand::Right].into_iter().enumerate() {
                let a = contraction(&sl_coefs, &sl[k], &t);
                let b = contraction(&gl_coefs, &gl[k], &t);
                cells.push(eq_cell(&format!("{hand:?} sl contraction = gl contraction"), names(), &a, &b));
                gl_vals.push(b);
            }
            cells.push(eq_cell("gl contraction: L - R = 0", names(), &gl_vals[0], &gl_vals[1]));
            cells
        })
        .collect();
    out.record_all(cells.into_iter().flatten());
    out
}

/// Whether `target` lies in the span of `p·m` over the given `p` and all
/// monomials `m`, truncated at `d`. The `p` must have rational coefficients.
pub fn in_sdet_ideal(target: &SuperPoly, ps: &[SuperPoly], d: u8) -> bool {
    if target.is_zero() {
        return true;
    }
    let sh_gens: Vec<Gen> = {
        let mut v: Vec<Gen> = ps
            .iter()
            .chain(std::iter::once(target))
            .flat_map(|p| p.terms().flat_map(|(m, _)| m.gens().collect::<Vec<_>>()))
            .collect();
        v.sort();
        v.dedup();
        v
    };
    // all monomials of degree < d in the variables involved
    let mut monos = vec![Monomial::ONE];
    let mut frontier = vec![Monomial::ONE];
    for _ in 1..d {
        let mut next = Vec::new();
        for m in &frontier {
            for g in &sh_gens {
                if let Some((p, _)) = m.mul(&Monomial::gen(*g)) {
                    next.push(p);
                }
            }
        }
        next.sort();
        next.dedup();
        monos.extend(next.iter().copied());
        frontier = next;
    }
    let products: Vec<SuperPoly> = ps
        .iter()
        .flat_map(|p| monos.iter().map(move |m| p.mono_mul_right(m).with_degree(d)))
        .filter(|p| !p.is_zero())
        .collect();
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in products.iter().chain(std::iter::once(target)) {
        for (m, _) in p.terms() {
            let n = index.len();
            index.entry(*m).or_insert(n);
        }
    }
    let dim = index.len();
    let mut vectors = Vec::new();
    for p in &products {
        let mut v = vec![num_rational::BigRational::from_integer(0.into()); dim];
        for (m, c) in p.terms() {
            match rational_entry(c) {
                Some(q) => v[index[m]] = q,
                None => return false,
            }
        }
        vectors.push(v);
    }
    let mut t = vec![RadicalScalar::zero(); dim];
    for (m, c) in target.terms() {
        t[index[m]] = c.clone();
    }
    in_rational_span(&vectors, &t)
}

/// `{sdet(1+Y) − 1, q}` and `{sdet(1+Z) − 1, q}` lie in the ideal generated
/// by the two sdet relations, modulo degree `> D`.
pub fn verify_sdet_compat(basis: &DoubleBasis, cfg: &SuiteConfig) -> SuiteResult {
    let mut out = SuiteResult::new("sdet-compat");
    let sh = basis.shape();
    let d = cfg.degree;
    let w = d + 1;
    let hw = HopfAlgebra::new(sh, w);
    let h = HopfAlgebra::new(sh, d);
    let bw = Bracket::sum(basis, w).expect("homogeneous");
    let rel = |hh: &HopfAlgebra, k: Kind| &hh.sdet(k) - &hh.one();
    let ps = [rel(&h, Kind::Y), rel(&h, Kind::Z)];
    let gens = double_generators(sh);
    let cells: Vec<Cell> = [Kind::Y, Kind::Z]
        .par_iter()
        .flat_map_iter(|&k| {
            let p = rel(&hw, k);
            let (bw, ps) = (&bw, &ps);
            gens.iter().map(move |&g| {
                let v = br(bw, &p, &SuperPoly::unit_shifted(g, w)).with_degree(d);
                if in_sdet_ideal(&v, ps, d) {
                    Ok(())
                } else {
                    Err(Witness::new("{sdet - 1, q} in the sdet ideal", vec![format!("sdet({k:?})"), g.to_string()], &v))
                }
            })
        })
        .collect();
    out.record_all(cells);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::build_double_basis;

    fn basis(m: usize, n: usize) -> DoubleBasis {
        build_double_basis(BlockShape::new(m, n).unwrap()).unwrap()
    }

    #[test]
    fn jacobi_examples() {
        let b = basis(2, 1);
        let sh = b.shape();
        let br = Bracket::sum(&b, 3).unwrap();
        let u = |k, i, j| SuperPoly::unit_shifted(Gen::new(sh, k, i, j), 3);
        let one = SuperPoly::one(3);
        assert!(jacobi_defect(&br, &u(Kind::Y, 0, 0), &u(Kind::Y, 0, 1), &u(Kind::Y, 1, 0)).unwrap().is_zero());
        assert!(jacobi_defect(&br, &one, &u(Kind::Y, 0, 1), &u(Kind::Y, 1, 0)).unwrap().is_zero());
        assert!(jacobi_defect(&br, &u(Kind::Y, 0, 2), &u(Kind::Y, 2, 0), &u(Kind::Z, 0, 1)).unwrap().is_zero());
    }

    #[test]
    fn coproduct_and_star_examples() {
        let b = basis(2, 1);
        let sh = b.shape();
        let h4 = HopfAlgebra::new(sh, 4);
        let b4 = Bracket::sum(&b, 4).unwrap();
        let u = |k, i, j, d| SuperPoly::unit_shifted(Gen::new(sh, k, i, j), d);
        assert!(coproduct_morphism_defect(&h4, &b4, &u(Kind::Y, 0, 0, 4), &u(Kind::Z, 0, 0, 4)).unwrap().is_zero());
        assert!(coproduct_morphism_defect(&h4, &b4, &h4.one(), &u(Kind::Z, 0, 1, 4)).unwrap().is_zero());
        assert!(coproduct_morphism_defect(&h4, &b4, &u(Kind::Y, 0, 2, 4), &u(Kind::Z, 2, 0, 4)).unwrap().is_zero());
        for (f, g) in [((0, 1), (1, 0)), ((0, 2), (2, 0))] {
            let lhs = u(Kind::Y, f.0, f.1, 4);
            let rhs = if f.0 == 0 && f.1 == 2 { u(Kind::Z, g.0, g.1, 4) } else { u(Kind::Y, g.0, g.1, 4) };
            assert!(star_compat_defect(&h4, &b4, &lhs, &rhs).unwrap().with_degree(3).is_zero());
        }
        assert!(star_compat_defect(&h4, &b4, &h4.one(), &u(Kind::Y, 0, 1, 4)).unwrap().is_zero());
    }

    #[test]
    fn perturbed_r_matrix_breaks_jacobi() {
        let b = basis(2, 1);
        let sh = b.shape();
        let mut table = RMatrixTable::standard(&b).unwrap();
        let (x, y, _) = table.entries[0].clone();
        table.entries.push((y, x, RadicalScalar::one()));
        let br = Bracket::general(&table, 3).unwrap();
        let gens = double_generators(sh);
        let polys: Vec<SuperPoly> = gens.iter().map(|&g| SuperPoly::gen(g, 3)).collect();
        let broken = all_triples(gens.len())
            .into_iter()
            .any(|[i, j, k]| !jacobi_defect(&br, &polys[i], &polys[j], &polys[k]).unwrap().is_zero());
        assert!(broken);
    }

    #[test]
    fn sdet_membership_oracle() {
        let sh = BlockShape::new(2, 1).unwrap();
        let h = HopfAlgebra::new(sh, 2);
        let ps = [&h.sdet(Kind::Y) - &h.one(), &h.sdet(Kind::Z) - &h.one()];
        let y12 = h.gen(Kind::Y, 0, 1);
        assert!(in_sdet_ideal(&(&ps[0] * &y12), &ps, 2));
        assert!(in_sdet_ideal(&(&ps[0] - &ps[1].scale(&RadicalScalar::from_int(3))), &ps, 2));
        assert!(!in_sdet_ideal(&y12, &ps, 2));
        assert!(in_sdet_ideal(&SuperPoly::zero(2), &ps, 2));
    }

    #[test]
    fn suites_small_shapes() {
        for (m, n) in [(2, 1), (1, 2)] {
            let b = basis(m, n);
            let cfg = SuiteConfig::new(3, 7);
            for r in [
                verify_c_operator(&b, &cfg),
                verify_wzw(&b, &cfg),
                verify_ideals(&b, &cfg),
                verify_sdet_compat(&b, &SuiteConfig::new(2, 7)),
            ] {
                assert!(r.ok(), "{} at ({m},{n}): {:?} notes {:?}", r.name, r.witness, r.notes);
            }
        }
    }
}

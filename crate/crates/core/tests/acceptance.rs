//! One line per acceptance criterion; exits non-zero if any line fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use superpl::calculus::verify_calculus;
use superpl::duality::verify_duality;
use superpl::hopf::verify::{verify_hopf_axioms, verify_star_axioms};
use superpl::hopf::{double_generators, HopfAlgebra, SuperPoly};
use superpl::liealg::{build_double_basis, fixed_point_dims, verify_basis_duality, verify_baxter, verify_manin, DoubleBasis};
use superpl::poisson::{
    verify_c_operator, verify_coproduct_morphism, verify_ideals, verify_jacobi, verify_star_compat, verify_wzw,
    Bracket, RMatrixTable, SuiteConfig,
};
use superpl::report::SuiteResult;
use superpl::supermatrix::BlockShape;

const SEED: u64 = 20_240_917;
const FOUR: [(usize, usize); 4] = [(2, 1), (1, 2), (3, 1), (3, 2)];
const SMALL: [(usize, usize); 2] = [(2, 1), (1, 2)];

fn basis(m: usize, n: usize) -> DoubleBasis {
    build_double_basis(BlockShape::new(m, n).unwrap()).unwrap()
}

/// Running tally for one criterion.
struct Line {
    cells: u64,
    failed: Vec<String>,
    notes: Vec<String>,
}

impl Line {
    fn new() -> Self {
        Self {
            cells: 0,
            failed: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn suite(&mut self, tag: &str, s: &SuiteResult) {
        self.cells += s.attempted;
        if !s.ok() {
            let w = s.witness.as_ref().map(|w| format!("{}: {} -> {}", w.check, w.inputs.join(","), w.defect));
            self.failed.push(format!("{tag} {} {}/{} {}", s.name, s.failures, s.attempted, w.unwrap_or_default()));
        }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        self.cells += 1;
        if !ok {
            self.failed.push(what.into());
        }
    }

    fn budget(&mut self, tag: &str, took: Duration, limit: Duration) {
        self.require(took < limit, format!("{tag} took {took:.1?}, budget {limit:?}"));
        self.notes.push(format!("{tag} {took:.1?}"));
    }
}

fn report(no: usize, title: &str, line: Line, all_ok: &mut bool) {
    let ok = line.failed.is_empty();
    *all_ok &= ok;
    let status = if ok { "PASS" } else { "FAIL" };
    let mut detail = format!("{} checks", line.cells);
    if !line.notes.is_empty() {
        detail.push_str("; ");
        detail.push_str(&line.notes.join(", "));
    }
    println!("criterion {no:>2} {status} {title} ({detail})");
    for f in &line.failed {
        println!("             failed: {f}");
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn basis_duality() -> Line {
    let mut l = Line::new();
    for (m, n) in FOUR {
        let tag = format!("({m},{n})");
        let (s, took) = timed(|| verify_basis_duality(&basis(m, n)));
        l.suite(&tag, &s);
        l.budget(&tag, took, Duration::from_secs(5));
    }
    l
}

fn baxter() -> Line {
    let mut l = Line::new();
    for (m, n) in FOUR {
        let tag = format!("({m},{n})");
        let (s, took) = timed(|| verify_baxter(&basis(m, n)));
        l.suite(&tag, &s);
        if (m, n) == (3, 2) {
            l.budget(&tag, took, Duration::from_secs(60));
        }
    }
    l
}

fn manin() -> Line {
    let mut l = Line::new();
    for (m, n) in FOUR {
        l.suite(&format!("({m},{n})"), &verify_manin(&basis(m, n)));
    }
    l
}

fn hopf_and_star() -> Line {
    let mut l = Line::new();
    for (m, n) in SMALL {
        for d in [3, 4] {
            let tag = format!("({m},{n}) D={d}");
            let h = HopfAlgebra::new(BlockShape::new(m, n).unwrap(), d);
            l.suite(&tag, &verify_hopf_axioms(&h));
            let (s, conv) = verify_star_axioms(&h);
            l.suite(&tag, &s);
            l.require(conv.is_some(), format!("{tag} tensor-star convention unresolved"));
            if let Some(c) = conv {
                if !l.notes.iter().any(|n| n.contains(c.describe())) {
                    l.notes.push(format!("tensor-star {}", c.describe()));
                }
            }
        }
    }
    l
}

fn jacobi_and_coproduct() -> Line {
    let mut l = Line::new();
    for (m, n) in SMALL {
        let tag = format!("({m},{n})");
        let b = basis(m, n);
        let cfg = SuiteConfig::new(3, SEED);
        let (s, took) = timed(|| verify_jacobi(&b, &cfg));
        l.suite(&tag, &s);
        let triples = 18u64.pow(3);
        l.require(s.attempted >= triples, format!("{tag} only {} jacobi cells for {triples} triples", s.attempted));
        l.budget(&tag, took, Duration::from_secs(600));
        l.suite(&tag, &verify_coproduct_morphism(&b, &cfg));
    }
    l
}

fn ideals() -> Line {
    let mut l = Line::new();
    for (m, n) in SMALL {
        let b = basis(m, n);
        let mut counts = Vec::new();
        for d in [3, 4] {
            let s = verify_ideals(&b, &SuiteConfig::new(d, SEED));
            l.suite(&format!("({m},{n}) D={d}"), &s);
            counts.push(s.attempted);
        }
        l.require(counts[0] == counts[1], format!("({m},{n}) ideal cells differ across D: {counts:?}"));
    }
    l
}

fn star_compat() -> Line {
    let mut l = Line::new();
    for (m, n) in SMALL {
        let b = basis(m, n);
        for d in [3, 4] {
            l.suite(&format!("({m},{n}) D={d}"), &verify_star_compat(&b, &SuiteConfig::new(d, SEED), &[d]));
        }
    }
    l
}

fn c_operator() -> Line {
    let mut l = Line::new();
    for (m, n) in [(2, 1), (1, 2), (3, 2)] {
        l.suite(&format!("({m},{n})"), &verify_c_operator(&basis(m, n), &SuiteConfig::new(3, SEED)));
    }
    l
}

fn wzw() -> Line {
    let mut l = Line::new();
    for (m, n) in [(2, 1), (1, 2), (3, 2)] {
        l.suite(&format!("({m},{n})"), &verify_wzw(&basis(m, n), &SuiteConfig::new(3, SEED)));
    }
    l.notes.push(format!("(3,2) operator level on 50 triples from seed {SEED}"));
    l
}

fn duality() -> Line {
    let mut l = Line::new();
    for (m, n) in SMALL {
        let b = basis(m, n);
        let h = HopfAlgebra::new(b.shape(), 3);
        match verify_duality(&b, &h) {
            Ok(s) => l.suite(&format!("({m},{n})"), &s),
            Err(e) => l.require(false, format!("({m},{n}) {e}")),
        }
    }
    l.notes.push("S as displayed intertwines up to (-1)^(|a||b|) and carries phi to the K-twist; S' = i^|a| S is the exact isomorphism".into());
    l
}

fn real_form() -> Line {
    let mut l = Line::new();
    for (m, n) in FOUR {
        match fixed_point_dims(BlockShape::new(m, n).unwrap()) {
            Ok((even, odd)) => {
                let want = m * m + n * n - 1;
                l.require(even == want && odd == 0, format!("({m},{n}) fixed dims ({even},{odd}), want ({want},0)"));
                l.notes.push(format!("({m},{n}) {even}+{odd}"));
            }
            Err(e) => l.require(false, format!("({m},{n}) {e}")),
        }
    }
    l
}

fn cross_form() -> Line {
    let mut l = Line::new();
    for (m, n) in SMALL {
        let b = basis(m, n);
        let sum = Bracket::sum(&b, 3).unwrap();
        let general = Bracket::general(&RMatrixTable::standard(&b).unwrap(), 3).unwrap();
        let gens: Vec<SuperPoly> = double_generators(b.shape()).into_iter().map(|g| SuperPoly::unit_shifted(g, 3)).collect();
        for (i, f) in gens.iter().enumerate() {
            for (j, g) in gens.iter().enumerate() {
                let same = sum.apply(f, g).unwrap() == general.apply(f, g).unwrap();
                l.require(same, format!("({m},{n}) generators {i},{j}"));
            }
        }
    }
    l
}

fn main() -> ExitCode {
    let mut ok = true;
    report(1, "basis duality", basis_duality(), &mut ok);
    report(2, "Baxter-Lie suite", baxter(), &mut ok);
    report(3, "Manin supertriple", manin(), &mut ok);
    report(4, "Hopf and star axioms at D=3,4", hopf_and_star(), &mut ok);
    report(5, "super-Jacobi exhaustive and coproduct morphism", jacobi_and_coproduct(), &mut ok);
    report(6, "ideals I and J", ideals(), &mut ok);
    report(7, "star-compatibility mod degree > D at D=3,4", star_compat(), &mut ok);
    report(8, "C^R = C^L and closed form", c_operator(), &mut ok);
    report(9, "WZW arrays and operator-level L-R", wzw(), &mut ok);
    report(10, "dual Lie superalgebras and transports", duality(), &mut ok);
    report(11, "real-form fixed-point dimensions", real_form(), &mut ok);
    report(12, "bracket_general = bracket_sum on generator pairs", cross_form(), &mut ok);
    // the calculus laws back criteria 5-8; a regression there is worth surfacing here too
    let b = basis(2, 1);
    let (calc, _) = verify_calculus(&b, &HopfAlgebra::new(b.shape(), 3));
    if !calc.ok() {
        println!("warning: calculus suite failed: {:?}", calc.witness);
        ok = false;
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

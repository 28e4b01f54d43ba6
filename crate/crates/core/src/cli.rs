//! Command-line driver: configuration, suite dispatch, reports and exports.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use serde_json::json;

use crate::calculus::verify_calculus;
use crate::duality::{induced_constants, verify_duality};
use crate::error::{Error, Result};
use crate::hopf::verify::{verify_hopf_axioms, verify_star_axioms};
use crate::hopf::HopfAlgebra;
use crate::liealg::{
    build_double_basis, structure_constants, verify_basis_duality, verify_baxter, verify_manin, verify_real_form,
    verify_triangular, DoubleBasis, StructureConstant,
};
use crate::poisson::{
    verify_c_operator, verify_coproduct_morphism, verify_ideals, verify_jacobi, verify_sdet_compat,
    verify_star_compat, verify_wzw, SuiteConfig,
};
use crate::report::{ConfigEcho, SuiteResult, VerificationReport};
use crate::supermatrix::BlockShape;

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Baxter,
    HopfAxioms,
    StarAxioms,
    Jacobi,
    CoproductMorphism,
    StarCompat,
    Ideals,
    COperator,
    Wzw,
    SdetCompat,
    Duality,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Baxter,
        Suite::HopfAxioms,
        Suite::StarAxioms,
        Suite::Jacobi,
        Suite::CoproductMorphism,
        Suite::StarCompat,
        Suite::Ideals,
        Suite::COperator,
        Suite::Wzw,
        Suite::SdetCompat,
        Suite::Duality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Baxter => "baxter",
            Suite::HopfAxioms => "hopf-axioms",
            Suite::StarAxioms => "star-axioms",
            Suite::Jacobi => "jacobi",
            Suite::CoproductMorphism => "coproduct-morphism",
            Suite::StarCompat => "star-compat",
            Suite::Ideals => "ideals",
            Suite::COperator => "c-operator",
            Suite::Wzw => "wzw",
            Suite::SdetCompat => "sdet-compat",
            Suite::Duality => "duality",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Debug, Parser)]
#[command(name = "superpl", version, about = "Exact identity suites for the Poisson-Lie superbracket on SL(m|n)")]
pub struct Args {
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Truncation degree D (2..=5).
    #[arg(long)]
    pub degree: Option<u8>,
    /// Suite name; repeatable. `all` selects the whole catalogue.
    #[arg(long = "suite")]
    pub suites: Vec<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Report path; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write basis tables and structure constants as JSON lines to this path.
    #[arg(long)]
    pub export_constants: Option<PathBuf>,
    /// `key = value` file supplying defaults; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Add per-suite wall times (breaks byte reproducibility).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub m: usize,
    pub n: usize,
    pub degree: u8,
    pub suites: Vec<Suite>,
    pub seed: u64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub export_constants: Option<PathBuf>,
    pub timings: bool,
}

impl RunConfig {
    pub fn new(m: usize, n: usize, degree: u8, suites: Vec<Suite>) -> Result<Self> {
        let cfg = Self {
            m,
            n,
            degree,
            suites,
            seed: DEFAULT_SEED,
            format: Format::Json,
            out: None,
            export_constants: None,
            timings: false,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn shape(&self) -> Result<BlockShape> {
        BlockShape::new(self.m, self.n).map_err(|e| Error::Config(e.to_string()))
    }

    fn validate(&self) -> Result<()> {
        self.shape()?;
        if !(2..=5).contains(&self.degree) {
            return Err(Error::Config(format!("degree {} outside 2..=5", self.degree)));
        }
        Ok(())
    }

    pub fn from_args(args: &Args) -> Result<Self> {
        let file = match &args.config {
            Some(p) => read_config_file(p)?,
            None => Vec::new(),
        };
        let lookup = |key: &str| file.iter().rev().find(|(k, _)| k == key).map(|(_, v)| v.as_str());
        fn parse<T: FromStr>(key: &str, v: &str) -> Result<T> {
            v.parse().map_err(|_| Error::Config(format!("bad value `{v}` for `{key}`")))
        }
        let m = match (args.m, lookup("m")) {
            (Some(m), _) => m,
            (None, Some(v)) => parse("m", v)?,
            (None, None) => 2,
        };
        let n = match (args.n, lookup("n")) {
            (Some(n), _) => n,
            (None, Some(v)) => parse("n", v)?,
            (None, None) => 1,
        };
        let degree = match (args.degree, lookup("degree")) {
            (Some(d), _) => d,
            (None, Some(v)) => parse("degree", v)?,
            (None, None) => 3,
        };
        let seed = match (args.seed, lookup("seed")) {
            (Some(s), _) => s,
            (None, Some(v)) => parse("seed", v)?,
            (None, None) => DEFAULT_SEED,
        };
        let format = match (args.format, lookup("format")) {
            (Some(f), _) => f,
            (None, Some(v)) => Format::from_str(v, true).map_err(|_| Error::Config(format!("bad format `{v}`")))?,
            (None, None) => Format::Json,
        };
        let names: Vec<String> = if !args.suites.is_empty() {
            args.suites.clone()
        } else {
            file.iter()
                .filter(|(k, _)| k == "suite")
                .flat_map(|(_, v)| v.split(',').map(|s| s.trim().to_string()))
                .collect()
        };
        let suites = parse_suites(&names)?;
        let out = args.out.clone().or_else(|| lookup("out").map(PathBuf::from));
        let export_constants = args.export_constants.clone().or_else(|| lookup("export-constants").map(PathBuf::from));
        let cfg = Self {
            m,
            n,
            degree,
            suites,
            seed,
            format,
            out,
            export_constants,
            timings: args.timings,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Empty or `all` selects the whole catalogue; order follows the catalogue.
pub fn parse_suites(names: &[String]) -> Result<Vec<Suite>> {
    if names.is_empty() || names.iter().any(|s| s == "all") {
        return Ok(Suite::ALL.to_vec());
    }
    let mut out: Vec<Suite> = names.iter().map(|s| s.parse()).collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

fn read_config_file(path: &Path) -> Result<Vec<(String, String)>> {
    let text = fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("{}:{}: expected key = value", path.display(), k + 1)))?;
        let key = key.trim().to_string();
        if !["m", "n", "degree", "suite", "seed", "format", "out", "export-constants"].contains(&key.as_str()) {
            return Err(Error::Config(format!("{}:{}: unknown key `{key}`", path.display(), k + 1)));
        }
        out.push((key, value.trim().to_string()));
    }
    Ok(out)
}

fn timed(f: impl FnOnce() -> SuiteResult) -> SuiteResult {
    let t = Instant::now();
    let mut s = f();
    s.elapsed = t.elapsed();
    s
}

fn merged(name: &str, parts: Vec<SuiteResult>) -> SuiteResult {
    let mut out = SuiteResult::new(name);
    for p in parts {
        out.absorb(p);
    }
    out
}

pub fn run(cfg: &RunConfig) -> Result<VerificationReport> {
    let sh = cfg.shape()?;
    let basis = build_double_basis(sh)?;
    let d = cfg.degree;
    let sc = SuiteConfig::new(d, cfg.seed);
    let mut report = VerificationReport::new(ConfigEcho {
        m: cfg.m,
        n: cfg.n,
        degree: d,
        suites: cfg.suites.iter().map(|s| s.name().to_string()).collect(),
        seed: cfg.seed,
    });
    let conv = &mut report.conventions;
    conv.insert(
        "phi".into(),
        "phi(A,B) = (-(-1)^|x| conj(B)^st, -(-1)^|x| conj(A)^st), matching the phi induced by * through the pairing".into(),
    );
    conv.insert(
        "bracket-summation".into(),
        "double-index sum runs over the full combined basis T, t of the double with r^ab = (R h^_a, h^_b)/2".into(),
    );
    conv.insert(
        "sampling".into(),
        if sh.size() <= 3 {
            "exhaustive over generator pairs and triples".into()
        } else {
            format!("{} ChaCha8 draws from seed {}", sc.samples, cfg.seed)
        },
    );
    conv.insert("truncation".into(), "degree-lowering identities are evaluated at D+1 and compared modulo degree > D".into());

    let hopf = || HopfAlgebra::new(sh, d);
    let mut suites = Vec::new();
    for &s in &cfg.suites {
        let result = match s {
            Suite::Baxter => timed(|| {
                merged(
                    "baxter",
                    vec![
                        verify_basis_duality(&basis),
                        verify_baxter(&basis),
                        verify_manin(&basis),
                        verify_triangular(&basis),
                        verify_real_form(&basis),
                    ],
                )
            }),
            Suite::HopfAxioms => {
                let mut laws = None;
                let r = timed(|| {
                    let h = hopf();
                    let (calc, signs) = verify_calculus(&basis, &h);
                    laws = Some(signs);
                    merged("hopf-axioms", vec![verify_hopf_axioms(&h), calc])
                });
                if let Some(signs) = laws {
                    for (key, law) in [("commutator-left", signs.left), ("commutator-right", signs.right)] {
                        let text = law.map_or_else(|| "no uniform law found".to_string(), |l| l.describe());
                        report.conventions.insert(key.into(), text);
                    }
                }
                r
            }
            Suite::StarAxioms => {
                let mut found = None;
                let r = timed(|| {
                    let (r, t) = verify_star_axioms(&hopf());
                    found = t;
                    r
                });
                report.conventions.insert(
                    "tensor-star".into(),
                    found.map_or("neither tensor-star convention holds", |t| t.describe()).into(),
                );
                r
            }
            Suite::Jacobi => timed(|| verify_jacobi(&basis, &sc)),
            Suite::CoproductMorphism => timed(|| verify_coproduct_morphism(&basis, &sc)),
            Suite::StarCompat => timed(|| verify_star_compat(&basis, &sc, &[d, d + 1])),
            Suite::Ideals => timed(|| verify_ideals(&basis, &sc)),
            Suite::COperator => timed(|| verify_c_operator(&basis, &sc)),
            Suite::Wzw => timed(|| verify_wzw(&basis, &sc)),
            Suite::SdetCompat => timed(|| verify_sdet_compat(&basis, &sc)),
            Suite::Duality => {
                let t = Instant::now();
                let mut r = verify_duality(&basis, &hopf())?;
                r.elapsed = t.elapsed();
                report.conventions.insert(
                    "s-transport".into(),
                    "S with rescaling (-1)^(|a|+1) intertwines brackets up to (-1)^(|a||b|); S' with an extra i^|a| is the isomorphism".into(),
                );
                r
            }
        };
        suites.push(result);
    }
    for s in suites {
        report.push(s);
    }
    Ok(report)
}

fn constant_record(source: &str, c: &StructureConstant) -> serde_json::Value {
    json!({
        "record": "bracket",
        "source": source,
        "i": c.i + 1,
        "j": c.j + 1,
        "basis": c.basis,
        "k": c.k + 1,
        "value": c.value,
    })
}

/// JSON lines: one `basis` record per element of `T` and `t`, then the
/// nonzero structure constants of the double and of `G*`, `B*`.
pub fn export_lines(basis: &DoubleBasis, degree: u8) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (idx, s) in basis.sides().enumerate() {
        let x = basis.get(s);
        out.push(
            json!({
                "record": "basis",
                "index": idx + 1,
                "label": basis.label(s),
                "odd": basis.side_odd(s),
                "a": x.a.to_json(),
                "b": x.b.to_json(),
            })
            .to_string(),
        );
    }
    for c in structure_constants(basis) {
        out.push(constant_record("double", &c).to_string());
    }
    for c in induced_constants(basis, degree.max(2))? {
        out.push(constant_record(c.basis, &c).to_string());
    }
    Ok(out)
}

pub fn export_constants(cfg: &RunConfig, path: &Path) -> Result<usize> {
    let basis = build_double_basis(cfg.shape()?)?;
    let lines = export_lines(&basis, cfg.degree)?;
    let mut f = fs::File::create(path)?;
    for l in &lines {
        writeln!(f, "{l}")?;
    }
    Ok(lines.len())
}

/// Parses `argv`, runs, writes outputs; returns the process exit status.
pub fn main_with<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&args) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(args: &Args) -> Result<bool> {
    let cfg = RunConfig::from_args(args)?;
    if let Some(p) = &cfg.export_constants {
        let k = export_constants(&cfg, p)?;
        eprintln!("wrote {k} records to {}", p.display());
    }
    let report = run(&cfg)?;
    let text = match cfg.format {
        Format::Json => report.to_json(cfg.timings),
        Format::Markdown => report.to_markdown(),
    };
    match &cfg.out {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(report.pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!(matches!("bogus".parse::<Suite>(), Err(Error::Config(_))));
        assert_eq!(parse_suites(&["all".into()]).unwrap().len(), 11);
        assert_eq!(parse_suites(&["wzw".into(), "baxter".into(), "wzw".into()]).unwrap(), vec![Suite::Baxter, Suite::Wzw]);
    }

    #[test]
    fn config_errors() {
        assert!(matches!(RunConfig::new(2, 2, 3, vec![]), Err(Error::Config(_))));
        assert!(matches!(RunConfig::new(2, 1, 6, vec![]), Err(Error::Config(_))));
        assert!(matches!(RunConfig::new(2, 1, 1, vec![]), Err(Error::Config(_))));
        assert!(RunConfig::new(1, 2, 2, vec![]).is_ok());
    }

    #[test]
    fn baxter_only_has_one_block() {
        let cfg = RunConfig::new(2, 1, 2, vec![Suite::Baxter]).unwrap();
        let r = run(&cfg).unwrap();
        assert_eq!(r.suites.len(), 1);
        assert!(r.pass);
    }

    #[test]
    fn export_counts_at_21() {
        let b = build_double_basis(BlockShape::new(2, 1).unwrap()).unwrap();
        let lines = export_lines(&b, 2).unwrap();
        let basis = lines.iter().filter(|l| l.contains("\"record\":\"basis\"")).count();
        assert_eq!(basis, 16);
        assert!(lines.len() > basis);
        for l in lines.iter().filter(|l| l.contains("\"record\":\"bracket\"")) {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            let s = v["value"].as_str().unwrap();
            let parsed: crate::scalar::RadicalScalar = s.parse().unwrap();
            assert_eq!(parsed.to_string(), s);
        }
    }
}

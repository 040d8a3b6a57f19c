//! Command-line front end.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::algebra::{dump_presentation, load_presentation, AlgebraError, NCPoly};
use crate::calculus::{cm_derivation, star, Derivation, StarTable};
use crate::hopf::{coproduct, counit, Antipode, LocalizedAlgebra, NINV};
use crate::presentations::{norm, specialize_at, specialize_poly, AlgebraCatalog};
use crate::report::Status;
use crate::scalar::parse_rational;
use crate::verify::{run_suite, VerifyOptions, SUITES};
use crate::{LaurentScalar, Poly, Pres};

#[derive(Parser, Debug)]
#[command(name = "qcalc", version, about = "Exact computations in the q-deformed quaternion algebra")]
pub struct Cli {
    /// Render with superscripts and ⊗.
    #[arg(long, global = true)]
    pub unicode: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(clap::Args, Debug, Clone)]
pub struct AlgebraArgs {
    /// Universe: hq, units, dga, cm, grassmann, hq-loc, units-dga, units-cm or classical-*.
    #[arg(long)]
    pub algebra: Option<String>,
    /// Evaluate q at this nonzero rational before reducing.
    #[arg(long = "at-q", allow_hyphen_values = true)]
    pub at_q: Option<String>,
    /// Use the uncorrected printed relations of the calculus.
    #[arg(long = "literal-paper")]
    pub literal: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Op {
    D,
    Star,
    Coproduct,
    Counit,
    Antipode,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the normal form of an expression.
    Nf {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Compare two expressions; exit 1 when they differ.
    Check {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
    },
    /// Apply d, star, coproduct, counit or antipode.
    Apply {
        op: Op,
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run a verification suite.
    Verify {
        /// all, algebra, hopf, dga, star, forms, classical, grassmann or vector-fields.
        suite: String,
        /// Degree cap for vector-field tabulation.
        #[arg(long, default_value_t = 3)]
        cap: usize,
        #[arg(long = "literal-paper")]
        literal: bool,
        /// Report file; defaults to qcalc-report-<suite>.json.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Zero the header and timings in the report file.
        #[arg(long)]
        stable: bool,
    },
    /// Print a shipped presentation as JSON.
    DumpPresentation {
        name: String,
        #[arg(long = "literal-paper")]
        literal: bool,
    },
    /// Load a presentation file, check its overlaps, and optionally reduce
    /// an expression in it.
    LoadPresentation { file: PathBuf, expr: Option<String> },
}

/// Errors carry their exit code: 2 for usage and parse errors, 1 otherwise.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(m: impl std::fmt::Display) -> Self {
        CliError { code: 2, message: m.to_string() }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        let code = match e {
            AlgebraError::UnknownSymbol { .. } => 2,
            _ => 1,
        };
        CliError { code, message: e.to_string() }
    }
}

struct Universe {
    tag: String,
    pres: Pres,
    q0: Option<BigRational>,
}

impl Universe {
    fn open(alg: &AlgebraArgs, default: &str, cat: &AlgebraCatalog) -> Result<Universe, CliError> {
        let tag = alg.algebra.clone().unwrap_or_else(|| default.to_string());
        let base = cat.get(&tag, alg.literal).map_err(CliError::usage)?;
        let q0 = match &alg.at_q {
            Some(s) => Some(parse_rational(s).map_err(|e| CliError::usage(format!("--at-q {s}: {e}")))?),
            None if tag.starts_with("classical-") => Some(BigRational::from_integer(1.into())),
            None => None,
        };
        let pres = match &q0 {
            Some(q) => specialize_at(&base, q, &base.name).map_err(CliError::usage)?,
            None => base,
        };
        Ok(Universe { tag, pres, q0 })
    }

    fn specialize(&self, p: Poly) -> Result<Poly, CliError> {
        match &self.q0 {
            Some(q) => Ok(specialize_poly(&p, q)?),
            None => Ok(p),
        }
    }

    fn norm(&self) -> Result<Poly, CliError> {
        self.specialize(norm())
    }

    /// Parses against this universe's generators. `N` is the q-norm and
    /// `Ninv` its inverse where those exist.
    fn parse(&self, text: &str) -> Result<Poly, CliError> {
        let has = |n: &str| self.pres.has_generator(n);
        let n = if (0..4).all(|k| has(&format!("a{k}"))) { Some(self.norm()?) } else { None };
        let resolve = |name: &str| -> Option<Poly> {
            match name {
                "N" => n.clone(),
                "Ninv" | "ninv" if has(NINV) => Some(NCPoly::var(NINV)),
                _ if has(name) => Some(NCPoly::var(name)),
                _ => None,
            }
        };
        let p = crate::expr::parse(text)
            .and_then(|e| e.eval::<LaurentScalar>(&self.tag, &resolve))
            .map_err(CliError::usage)?;
        self.specialize(p)
    }

    /// Rewriting, plus `Ninv·N = 1` in the localized universe.
    fn normal_form(&self, p: &Poly) -> Result<Poly, CliError> {
        if self.pres.has_generator(NINV) {
            Ok(LocalizedAlgebra { pres: self.pres.clone(), norm: self.norm()? }.normal_form(p)?)
        } else {
            Ok(self.pres.normal_form(p)?)
        }
    }

    fn render(&self, p: &Poly, unicode: bool) -> String {
        self.pres.render(p, unicode)
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<ExitCode, CliError> {
    let cat = AlgebraCatalog::build()?;
    let unicode = cli.unicode;
    let io = |e: std::io::Error| CliError { code: 1, message: e.to_string() };
    match cli.command {
        Command::Nf { alg, expr } => {
            let u = Universe::open(&alg, "hq", &cat)?;
            let p = u.normal_form(&u.parse(&expr)?)?;
            writeln!(out, "{}", u.render(&p, unicode)).map_err(io)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { alg, lhs, rhs } => {
            let u = Universe::open(&alg, "hq", &cat)?;
            let (l, r) = (u.parse(&lhs)?, u.parse(&rhs)?);
            let p = u.normal_form(&(l - r))?;
            if p.is_zero() {
                writeln!(out, "EQUAL").map_err(io)?;
                Ok(ExitCode::SUCCESS)
            } else {
                writeln!(out, "DIFFERENT: {}", u.render(&p, unicode)).map_err(io)?;
                Ok(ExitCode::from(1))
            }
        }
        Command::Apply { op, alg, expr } => {
            let default = if op == Op::D { "dga" } else { "hq" };
            let u = Universe::open(&alg, default, &cat)?;
            let p = u.parse(&expr)?;
            writeln!(out, "{}", apply(op, &u, &p, unicode)?).map_err(io)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, cap, literal, report, stable } => {
            if !SUITES.contains(&suite.as_str()) {
                return Err(CliError::usage(format!("unknown suite '{suite}' (expected one of: {})", SUITES.join(", "))));
            }
            let opts = VerifyOptions { cap, literal, ..VerifyOptions::default() };
            let r = run_suite(&suite, &cat, &opts)?;
            write!(out, "{}", r.to_table()).map_err(io)?;
            let path = report.unwrap_or_else(|| PathBuf::from(format!("qcalc-report-{suite}.json")));
            let text = if stable { r.to_stable_json() } else { r.to_json() };
            std::fs::write(&path, text).map_err(io)?;
            writeln!(out, "report written to {}", path.display()).map_err(io)?;
            Ok(if r.count(Status::Fail) == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::DumpPresentation { name, literal } => {
            let p = cat.get(&name, literal).map_err(CliError::usage)?;
            write!(out, "{}", dump_presentation(&p)).map_err(io)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::LoadPresentation { file, expr } => {
            let text = std::fs::read_to_string(&file).map_err(|e| CliError::usage(format!("{}: {e}", file.display())))?;
            let p = load_presentation(&text).map_err(CliError::usage)?;
            let failures = p.check_local_confluence()?;
            writeln!(
                out,
                "{}: {} generators, {} rules, {} of {} overlaps fail",
                p.name,
                p.generators().len(),
                p.rules().len(),
                failures.len(),
                p.overlap_count()
            )
            .map_err(io)?;
            if let Some(e) = expr {
                let gens: Vec<_> = p.generators().iter().map(|g| g.id.as_str()).collect();
                let resolve = |name: &str| gens.contains(&name).then(|| NCPoly::var(name));
                let poly = crate::expr::parse(&e).and_then(|x| x.eval::<LaurentScalar>(&p.name, &resolve)).map_err(CliError::usage)?;
                writeln!(out, "{}", p.render(&p.normal_form(&poly)?, unicode)).map_err(io)?;
            }
            Ok(if failures.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn apply(op: Op, u: &Universe, p: &Poly, unicode: bool) -> Result<String, CliError> {
    let pres = &u.pres;
    let mismatch = |what: &str| CliError::usage(format!("{what} is not defined on universe {}", u.tag));
    Ok(match op {
        Op::D => {
            let d = if pres.generators().iter().any(|g| g.id.as_str().starts_with("da")) {
                Derivation::exterior(pres)
            } else if pres.has_generator("w0") {
                let base = cm_derivation(pres, false)?;
                // The form texts carry q; specialize the images with the universe.
                let images: Vec<_> = pres
                    .generators()
                    .iter()
                    .filter_map(|g| base.image(g.id).map(|img| (g.id, img.clone())))
                    .map(|(s, img)| Ok::<_, CliError>((s, u.specialize(img)?)))
                    .collect::<Result<_, _>>()?;
                Derivation::new(pres, images)
            } else {
                return Err(mismatch("d"));
            };
            u.render(&pres.normal_form(&d.apply(p))?, unicode)
        }
        Op::Star => {
            let table = star_table(u)?;
            u.render(&star(p, &table, pres)?, unicode)
        }
        Op::Coproduct => {
            if pres.has_generator(NINV) || !pres.has_generator("a0") {
                return Err(mismatch("coproduct"));
            }
            let t = coproduct(p, pres)?;
            if t.is_zero() {
                "0".into()
            } else {
                t.render(pres, unicode)
            }
        }
        Op::Counit => counit(p)?.to_string(),
        Op::Antipode => {
            let base_tag = u.tag.trim_start_matches("classical-");
            if base_tag != "hq" && base_tag != "hq-loc" {
                return Err(mismatch("antipode"));
            }
            let mut hq = crate::presentations::build_hq();
            if let Some(q) = &u.q0 {
                hq = specialize_at(&hq, q, &hq.name)?;
            }
            let loc = LocalizedAlgebra::new(&hq, u.norm()?)?;
            let hq_universe = Universe { tag: u.tag.clone(), pres: hq, q0: u.q0.clone() };
            let s = Antipode::new(loc, &star_table(&hq_universe)?)?;
            s.algebra.pres.render(&s.apply(p)?, unicode)
        }
    })
}

fn star_table(u: &Universe) -> Result<StarTable, CliError> {
    let t = StarTable::for_presentation(&u.pres);
    Ok(match &u.q0 {
        Some(q) => t.at_q(q)?,
        None => t,
    })
}

/// Parses arguments, runs, and maps errors to exit codes.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

//! The `motivecalc` command line.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 usage, 3 non-generic weight,
//! 4 missing data.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::formulas::{
    bb_fixed_loci_par_higgs, bb_poincare, motive_higgs, motive_higgs_fixed_det, motive_par_higgs,
    motive_parabolic_even, BBComponent,
};
use crate::motive::{expand_rational, poincare, CurveContext, MotiveAtom, MotiveExpr};
use crate::poly::Poly;
use crate::verify::{run_all, run_suite, SuiteReport, VerifyConfig};
use crate::wallcross::{closed_formula_parabolic, exponents, motive_by_path_report};
use crate::weights::{
    canonical_wall, classify_chamber, enumerate_walls, flip_type, flip_type_even, perturb, wall_eval,
    Parity, Wall, Weight,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_GENERIC: i32 = 3;
pub const EXIT_MISSING_DATA: i32 = 4;

/// Commands that enumerate subsets of the marked points refuse larger `N`.
pub const MAX_CLI_POINTS: usize = 16;

#[derive(Parser, Debug)]
#[command(name = "motivecalc", version, about = "Chow motives of rank-2 parabolic and Higgs moduli on a curve")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the walls for N points with flip types and canonical forms.
    Walls,
    /// Classify the chamber of --alpha and print its exponent table.
    Chamber,
    /// Motive of the space selected by --space.
    Motive,
    /// Poincaré polynomial of the space selected by --space.
    Poincare,
    /// Fixed loci of the scaling action on parabolic Higgs moduli.
    Bb,
    /// Wall-crossing log from the chamber of the origin to --alpha.
    Path,
    /// Run the property suites.
    Verify,
}

#[derive(Args, Debug)]
struct Opts {
    /// Genus of the curve.
    #[arg(long = "g", global = true)]
    g: Option<u32>,
    /// Number of marked points (defaults to the length of --alpha).
    #[arg(long = "N", global = true)]
    n: Option<usize>,
    /// Degree.
    #[arg(long = "d", global = true, default_value_t = 1, allow_hyphen_values = true)]
    d: i64,
    /// Parabolic weights, e.g. 1/3,2/5,1/7.
    #[arg(long, global = true)]
    alpha: Option<String>,
    #[arg(long, global = true, value_enum)]
    space: Option<Space>,
    /// Use the fixed-determinant variant of --space.
    #[arg(long, global = true)]
    fixed_det: bool,
    /// Identify all Pic^a C with Jac C.
    #[arg(long, global = true)]
    collapse_pic: bool,
    /// Expand moduli atoms into curve motives.
    #[arg(long, global = true)]
    expand: bool,
    #[arg(long, global = true, value_enum, default_value = "json")]
    output: Output,
    /// Seed for sampling and perturbation.
    #[arg(long, global = true, env = "MOTIVECALC_SEED", default_value_t = 0)]
    seed: u64,
    /// Replace a non-generic --alpha by a seeded perturbation.
    #[arg(long, global = true)]
    perturb: bool,
    /// JSON map from n to the Poincaré coefficients of ~Sym^n C.
    #[arg(long = "tilde-betti", global = true, value_name = "FILE")]
    tilde_betti: Option<PathBuf>,
    /// Run a single verification suite.
    #[arg(long, global = true, value_name = "NAME")]
    suite: Option<String>,
    #[arg(long, global = true, default_value_t = 20, value_name = "K")]
    trials: usize,
    /// Print Betti numbers one per row.
    #[arg(long, global = true)]
    betti: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Space {
    #[value(name = "N", alias = "n")]
    N,
    #[value(name = "NL", alias = "nl")]
    Nl,
    #[value(name = "parabolic")]
    Parabolic,
    #[value(name = "parabolic_fixed")]
    ParabolicFixed,
    #[value(name = "higgs")]
    Higgs,
    #[value(name = "higgs_fixed")]
    HiggsFixed,
    #[value(name = "par_higgs")]
    ParHiggs,
    #[value(name = "par_higgs_fixed")]
    ParHiggsFixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Csv,
    Plain,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotGeneric { .. } | Error::DegeneratePath { .. } => EXIT_NOT_GENERIC,
            Error::MissingBettiTable { .. } => EXIT_MISSING_DATA,
            Error::NotEffective(_) => EXIT_VERIFY_FAILED,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_VERIFY_FAILED, message: format!("write failed: {e}") }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Parse `args` (including the program name), run the command and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CliResult<i32> {
    let o = &cli.opts;
    match cli.command {
        Command::Walls => cmd_walls(o, out),
        Command::Chamber => cmd_chamber(o, out),
        Command::Motive => cmd_motive(o, out),
        Command::Poincare => cmd_poincare(o, out),
        Command::Bb => cmd_bb(o, out),
        Command::Path => cmd_path(o, out),
        Command::Verify => cmd_verify(o, out),
    }
}

fn genus(o: &Opts) -> CliResult<u32> {
    o.g.ok_or_else(|| Failure::usage("--g is required"))
}

fn alpha(o: &Opts) -> CliResult<Option<Weight>> {
    let Some(text) = &o.alpha else { return Ok(None) };
    let mut a = Weight::parse(text)?;
    if let Some(n) = o.n {
        if n != a.len() {
            return Err(Failure::usage(format!("--alpha has {} entries but --N is {n}", a.len())));
        }
    }
    if o.perturb {
        a = perturb(&a, Parity::of_degree(o.d), o.seed)?;
    }
    Ok(Some(a))
}

fn points(o: &Opts, a: Option<&Weight>) -> CliResult<usize> {
    let n = a.map(Weight::len).or(o.n).unwrap_or(0);
    if n > MAX_CLI_POINTS {
        return Err(Failure::usage(format!("at most {MAX_CLI_POINTS} marked points are supported")));
    }
    Ok(n)
}

fn require_alpha(o: &Opts) -> CliResult<Weight> {
    alpha(o)?.ok_or_else(|| Failure::usage("--alpha is required"))
}

fn context(o: &Opts, g: u32, n: usize) -> CliResult<CurveContext> {
    let mut ctx = CurveContext::new(g, n as u32).with_collapse_pic(o.collapse_pic);
    if let Some(path) = &o.tilde_betti {
        let text = std::fs::read_to_string(path).map_err(|e| Failure {
            code: EXIT_MISSING_DATA,
            message: format!("cannot read {}: {e}", path.display()),
        })?;
        let raw: BTreeMap<u32, Vec<i128>> = serde_json::from_str(&text)
            .map_err(|e| Failure::usage(format!("{}: expected a JSON map n -> coefficients: {e}", path.display())))?;
        ctx = ctx.with_tilde_betti(raw.into_iter().map(|(k, v)| (k, Poly::new(v))).collect());
    }
    Ok(ctx)
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    writeln!(out, "{text}")?;
    Ok(())
}

#[derive(Serialize)]
struct WallRow {
    wall: Wall,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_minus: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_plus: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    flop: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    canonical_l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    negated: Option<bool>,
    /// Side of the wall containing `--alpha`.
    #[serde(skip_serializing_if = "Option::is_none")]
    side: Option<char>,
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn cmd_walls(o: &Opts, out: &mut dyn Write) -> CliResult<i32> {
    let a = alpha(o)?;
    let n = points(o, a.as_ref())?;
    let parity = Parity::of_degree(o.d);
    let mut rows = Vec::new();
    for w in enumerate_walls(n, parity) {
        let mut row =
            WallRow { wall: w, n_minus: None, n_plus: None, flop: None, canonical_l: None, negated: None, side: None };
        if let Some(g) = o.g {
            let fd = match parity {
                Parity::Odd => Some(flip_type(&w, g, n, o.fixed_det)?),
                Parity::Even => flip_type_even(&w, g, n, o.fixed_det)?,
            };
            if let Some(fd) = fd {
                row.n_minus = Some(fd.n_minus);
                row.n_plus = Some(fd.n_plus);
                row.flop = Some(fd.is_flop);
            }
        }
        if parity == Parity::Odd {
            let c = canonical_wall(&w, n)?;
            row.canonical_l = Some(c.l);
            row.negated = Some(c.negated);
        }
        if let Some(a) = &a {
            let v = wall_eval(&w, a)?;
            row.side = Some(if v > num::zero() { '+' } else if v < num::zero() { '-' } else { '0' });
        }
        rows.push(row);
    }
    match o.output {
        Output::Json => emit_json(out, &rows)?,
        Output::Csv => {
            writeln!(out, "s,I,parity,n_minus,n_plus,flop,canonical_l,negated,side")?;
            for r in &rows {
                let members: Vec<String> = r.wall.members().iter().map(ToString::to_string).collect();
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{}",
                    r.wall.s,
                    members.join(" "),
                    if r.wall.parity == Parity::Odd { "odd" } else { "even" },
                    opt(&r.n_minus),
                    opt(&r.n_plus),
                    opt(&r.flop),
                    opt(&r.canonical_l),
                    opt(&r.negated),
                    opt(&r.side),
                )?;
            }
        }
        Output::Plain => {
            writeln!(out, "{} walls for N = {n}", rows.len())?;
            for r in &rows {
                write!(out, "{}", r.wall)?;
                if let (Some(m), Some(p)) = (r.n_minus, r.n_plus) {
                    write!(out, "  type ({m}, {p}){}", if r.flop == Some(true) { " flop" } else { "" })?;
                }
                if let Some(l) = r.canonical_l {
                    write!(out, "  ~ W({l}){}", if r.negated == Some(true) { " negated" } else { "" })?;
                }
                if let Some(s) = r.side {
                    write!(out, "  side {s}")?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_chamber(o: &Opts, out: &mut dyn Write) -> CliResult<i32> {
    if Parity::of_degree(o.d) == Parity::Even {
        return Err(Failure::usage("chamber classification needs odd --d"));
    }
    let a = require_alpha(o)?;
    let class = classify_chamber(&a)?;
    let table = exponents(&a)?;
    match o.output {
        Output::Json => {
            #[derive(Serialize)]
            struct Report<'a> {
                alpha: &'a Weight,
                class: &'static str,
                exponents: &'a crate::wallcross::ExponentTable,
                identity: crate::wallcross::IdentityCheck,
            }
            emit_json(out, &Report { alpha: &a, class: class.label(), exponents: &table, identity: table.check_identity() })?;
        }
        Output::Csv => {
            writeln!(out, "j,d,c,b")?;
            for j in 0..table.d.len() {
                writeln!(out, "{j},{},{},{}", table.d[j], table.c[j], opt(&table.b.get(j)))?;
            }
        }
        Output::Plain => {
            writeln!(out, "alpha = {a}")?;
            writeln!(out, "chamber: {class}")?;
            writeln!(out, "d = {:?}", table.d)?;
            writeln!(out, "c = {:?}", table.c)?;
            writeln!(out, "b = {:?}", table.b)?;
        }
    }
    Ok(EXIT_OK)
}

fn build_motive(o: &Opts) -> CliResult<(MotiveExpr, CurveContext)> {
    let space = o.space.ok_or_else(|| Failure::usage("--space is required"))?;
    let g = genus(o)?;
    let fixed = o.fixed_det || matches!(space, Space::Nl | Space::ParabolicFixed | Space::HiggsFixed | Space::ParHiggsFixed);
    let (m, ctx) = match space {
        Space::N | Space::Nl => {
            let ctx = context(o, g, 0)?;
            let atom = if fixed { MotiveAtom::moduli_nl(o.d)? } else { MotiveAtom::moduli_n(o.d)? };
            (MotiveExpr::atom(atom), ctx)
        }
        Space::Parabolic | Space::ParabolicFixed => {
            let a = require_alpha(o)?;
            let ctx = context(o, g, points(o, Some(&a))?)?;
            let m = match Parity::of_degree(o.d) {
                Parity::Odd => closed_formula_parabolic(&a, &ctx, o.d, fixed)?,
                Parity::Even => motive_parabolic_even(&ctx, o.d, &a, fixed)?,
            };
            (m, ctx)
        }
        Space::Higgs | Space::HiggsFixed => {
            let ctx = context(o, g, 0)?;
            let m = if fixed { motive_higgs_fixed_det(&ctx, o.d)? } else { motive_higgs(&ctx, o.d)? };
            (m, ctx)
        }
        Space::ParHiggs | Space::ParHiggsFixed => {
            let a = alpha(o)?;
            let ctx = context(o, g, points(o, a.as_ref())?)?;
            (motive_par_higgs(&ctx, o.d, fixed)?, ctx)
        }
    };
    Ok((m, ctx))
}

fn emit_motive(o: &Opts, out: &mut dyn Write, m: &MotiveExpr) -> CliResult<()> {
    match o.output {
        Output::Json => emit_json(out, m)?,
        Output::Csv => {
            writeln!(out, "coeff,twist,atoms")?;
            for t in m.terms() {
                let atoms: Vec<String> = t.atoms.iter().map(ToString::to_string).collect();
                writeln!(out, "{},{},{}", t.coeff, t.twist, atoms.join(" ⊗ "))?;
            }
        }
        Output::Plain => writeln!(out, "{m}")?,
    }
    Ok(())
}

fn cmd_motive(o: &Opts, out: &mut dyn Write) -> CliResult<i32> {
    let (m, ctx) = build_motive(o)?;
    let m = if o.expand { expand_rational(&m, &ctx) } else { m };
    emit_motive(o, out, &m)?;
    Ok(EXIT_OK)
}

fn emit_poly(o: &Opts, out: &mut dyn Write, p: &Poly) -> CliResult<()> {
    let coeffs = p.coeffs();
    match o.output {
        Output::Json => {
            #[derive(Serialize)]
            struct Report<'a> {
                coefficients: &'a [i128],
                euler: i128,
            }
            emit_json(out, &Report { coefficients: coeffs, euler: p.eval(-1) })?;
        }
        Output::Csv => {
            writeln!(out, "k,b_k")?;
            for (k, c) in coeffs.iter().enumerate() {
                writeln!(out, "{k},{c}")?;
            }
        }
        Output::Plain if o.betti => {
            for (k, c) in coeffs.iter().enumerate() {
                writeln!(out, "b_{k} = {c}")?;
            }
        }
        Output::Plain => writeln!(out, "{p}")?,
    }
    Ok(())
}

fn cmd_poincare(o: &Opts, out: &mut dyn Write) -> CliResult<i32> {
    let (m, ctx) = build_motive(o)?;
    let p = poincare(&expand_rational(&m, &ctx), &ctx)?;
    emit_poly(o, out, &p)?;
    Ok(EXIT_OK)
}

fn cmd_bb(o: &Opts, out: &mut dyn Write) -> CliResult<i32> {
    let g = genus(o)?;
    let a = match alpha(o)? {
        Some(a) => a,
        None => Weight::near_origin(points(o, None)?, 4),
    };
    let ctx = context(o, g, points(o, Some(&a))?)?;
    let comps: Vec<BBComponent> = bb_fixed_loci_par_higgs(&ctx, o.d, &a, o.fixed_det)?;
    match o.output {
        Output::Json => emit_json(out, &comps)?,
        Output::Csv => {
            writeln!(out, "kind,d_prime,m_prime,j,l,codim,base")?;
            for c in &comps {
                let m: String = c.m_prime.as_ref().map(|v| v.iter().map(ToString::to_string).collect()).unwrap_or_default();
                let kind = serde_json::to_value(c.kind).expect("serializable");
                writeln!(
                    out,
                    "{},{},{m},{},{},{},{}",
                    kind.as_str().unwrap_or_default(),
                    opt(&c.d_prime),
                    opt(&c.j),
                    opt(&c.l),
                    c.codim,
                    c.base
                )?;
            }
        }
        Output::Plain => {
            for c in &comps {
                match (c.d_prime, &c.m_prime) {
                    (Some(dp), Some(mp)) => writeln!(out, "d'={dp} m'={mp:?} codim {}: {}", c.codim, c.base)?,
                    _ => writeln!(out, "stable bundles, codim {}: {}", c.codim, c.base)?,
                }
            }
            if !o.fixed_det || ctx.tilde_sym_betti.is_some() {
                match bb_poincare(&comps, &ctx) {
                    Ok(p) => writeln!(out, "P = {p}")?,
                    Err(Error::MissingBettiTable { .. }) => {}
                    Err(e) => return Err(e.into()),
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_path(o: &Opts, out: &mut dyn Write) -> CliResult<i32> {
    let g = genus(o)?;
    let a = require_alpha(o)?;
    let ctx = context(o, g, points(o, Some(&a))?)?;
    let report = motive_by_path_report(&a, &ctx, o.d, o.fixed_det)?;
    match o.output {
        Output::Json => emit_json(out, &report)?,
        Output::Csv => {
            writeln!(out, "t,wall,direction,n_minus,n_plus,added,removed")?;
            for s in &report.steps {
                let dir = serde_json::to_value(s.direction).expect("serializable");
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    s.t,
                    s.wall.to_string().replace(',', ""),
                    dir.as_str().unwrap_or_default(),
                    s.n_minus,
                    s.n_plus,
                    s.added,
                    s.removed
                )?;
            }
        }
        Output::Plain => {
            for s in &report.steps {
                let dir = serde_json::to_value(s.direction).expect("serializable");
                writeln!(
                    out,
                    "t={} {} {} type ({}, {}): +[{}] -[{}]",
                    s.t,
                    s.wall,
                    dir.as_str().unwrap_or_default(),
                    s.n_minus,
                    s.n_plus,
                    s.added,
                    s.removed
                )?;
            }
            writeln!(out, "{}", report.motive)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(o: &Opts, out: &mut dyn Write) -> CliResult<i32> {
    let cfg = VerifyConfig { g: o.g, n: o.n, trials: o.trials, seed: o.seed };
    if let Some(n) = o.n {
        if n > MAX_CLI_POINTS {
            return Err(Failure::usage(format!("at most {MAX_CLI_POINTS} marked points are supported")));
        }
    }
    let reports: Vec<SuiteReport> = match &o.suite {
        Some(name) => vec![run_suite(name, &cfg).map_err(|e| Failure::usage(e.to_string()))?],
        None => run_all(&cfg),
    };
    match o.output {
        Output::Json => emit_json(out, &reports)?,
        Output::Csv => {
            writeln!(out, "suite,passed,checks,counterexamples")?;
            for r in &reports {
                writeln!(out, "{},{},{},{}", r.name, r.passed, r.checks, r.counterexamples.len())?;
            }
        }
        Output::Plain => {
            for r in &reports {
                let tag = if r.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{tag} {} ({} checks): {}", r.name, r.checks, r.summary)?;
                for c in &r.counterexamples {
                    writeln!(out, "    {c}")?;
                }
            }
        }
    }
    Ok(if reports.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

//! Property suites run by `motivecalc verify`.
//!
//! Each suite checks an identity or an agreement between two independent
//! computations over a range of parameters and reports counterexamples.

use num::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formulas::{
    bb_base_dimension, bb_fixed_loci_par_higgs, bb_poincare, motive_par_higgs, thaddeus_poincare_nl,
};
use crate::motive::{
    chow_decomposition, expand_rational, poincare, ChowDecomposition, ChowSymbol, CurveContext, MotiveAtom,
    MotiveExpr,
};
use crate::poly::Poly;
use crate::wallcross::{
    closed_formula_parabolic, exponents, increment_law, minimal_chamber_motive, motive_by_path, walk,
};
use crate::weights::{
    canonical_wall, enumerate_walls, flip_type, flip_type_via_chi, hecke_action, sample_generic_weight,
    segment_crossings, Direction, Parity, Wall, Weight,
};

pub const SUITES: &[&str] = &[
    "walls",
    "flip-window",
    "chi-par",
    "canonical-walls",
    "bd-identity",
    "increment-law",
    "worked-examples",
    "path-closed",
    "hecke-invariance",
    "thaddeus",
    "product-law",
    "chow",
    "alpha-independence",
    "lagrangian",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub g: Option<u32>,
    pub n: Option<usize>,
    pub trials: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { g: None, n: None, trials: 20, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub passed: bool,
    pub checks: usize,
    pub summary: String,
    pub counterexamples: Vec<String>,
}

const MAX_COUNTEREXAMPLES: usize = 5;

struct Recorder {
    checks: usize,
    failures: usize,
    counterexamples: Vec<String>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { checks: 0, failures: 0, counterexamples: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(what());
            }
        }
    }

    fn error(&mut self, e: Error, context: impl FnOnce() -> String) {
        self.check(false, || format!("{}: {e}", context()));
    }

    fn finish(self, name: &str, summary: String) -> SuiteReport {
        SuiteReport {
            name: name.to_string(),
            passed: self.failures == 0,
            checks: self.checks,
            summary,
            counterexamples: self.counterexamples,
        }
    }
}

fn genus_range(cfg: &VerifyConfig, default: std::ops::RangeInclusive<u32>) -> Vec<u32> {
    match cfg.g {
        Some(g) => vec![g],
        None => default.collect(),
    }
}

fn points_range(cfg: &VerifyConfig, default: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    match cfg.n {
        Some(n) => vec![n],
        None => default.collect(),
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        0
    } else {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
}

pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let report = match name {
        "walls" => walls(cfg),
        "flip-window" => flip_window(cfg),
        "chi-par" => chi_par_suite(cfg, &mut rng),
        "canonical-walls" => canonical_walls(cfg),
        "bd-identity" => bd_identity(cfg, &mut rng),
        "increment-law" => increment(cfg, &mut rng),
        "worked-examples" => worked_examples(cfg),
        "path-closed" => path_closed(cfg, &mut rng),
        "hecke-invariance" => hecke_invariance(cfg, &mut rng),
        "thaddeus" => thaddeus(cfg),
        "product-law" => product_law(cfg),
        "chow" => chow(cfg),
        "alpha-independence" => alpha_independence(cfg, &mut rng),
        "lagrangian" => lagrangian(cfg, &mut rng),
        other => {
return Err(Error::UnknownSuite(other.to_string()))
        }
    };
    Ok(report)
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    SUITES.iter().map(|s| run_suite(s, cfg).expect("listed suite")).collect()
}

fn walls(cfg: &VerifyConfig) -> SuiteReport {
    let mut r = Recorder::new();
    r.check(enumerate_walls(2, Parity::Odd).len() == 1, || "N=2 should have one wall".into());
    r.check(enumerate_walls(3, Parity::Odd).len() == 4, || "N=3 should have four walls".into());
    for n in points_range(cfg, 0..=10) {
        let mut expected = 0u64;
        let mut s = 0u64;
        while 2 * s + 1 < n as u64 {
            expected += (2 * s + 2..=n as u64).map(|k| binomial(n as u64, k)).sum::<u64>();
            s += 1;
        }
        let got = enumerate_walls(n, Parity::Odd).len() as u64;
        r.check(got == expected, || format!("N={n}: {got} walls, expected {expected}"));
    }
    r.finish("walls", "wall counts match the subset count".into())
}

fn flip_window(cfg: &VerifyConfig) -> SuiteReport {
    let mut r = Recorder::new();
    for n in points_range(cfg, 0..=8) {
        for w in enumerate_walls(n, Parity::Odd) {
            for g in genus_range(cfg, 2..=10) {
                let fd = flip_type(&w, g, n, false).expect("valid wall");
                let (lo, hi) = (g as i64 - 1, g as i64 + n as i64 - 3);
                let ok = (lo..=hi).contains(&fd.n_minus)
                    && (lo..=hi).contains(&fd.n_plus)
                    && fd.n_minus + fd.n_plus == 2 * g as i64 + n as i64 - 4;
                r.check(ok, || format!("g={g} N={n} {w}: ({}, {})", fd.n_minus, fd.n_plus));
            }
        }
    }
    r.finish("flip-window", "g-1 <= n_-, n_+ <= g+N-3 and n_- + n_+ = 2g+N-4".into())
}

fn random_wall(rng: &mut ChaCha8Rng, n: usize) -> Option<Wall> {
    let walls = enumerate_walls(n, Parity::Odd);
    (!walls.is_empty()).then(|| walls[rng.gen_range(0..walls.len())])
}

fn chi_par_suite(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut r = Recorder::new();
    let trials = cfg.trials.max(1) * 50;
    for _ in 0..trials {
        let g = cfg.g.unwrap_or_else(|| rng.gen_range(0..=10));
        let n = cfg.n.unwrap_or_else(|| rng.gen_range(2..=8));
        let Some(w) = random_wall(rng, n) else { continue };
        let d = 2 * rng.gen_range(-5i64..=5) + 1;
        let fd = flip_type(&w, g, n, false).expect("valid wall");
        match flip_type_via_chi(&w, g, n, d) {
            Ok(via) => r.check(via == (fd.n_minus, fd.n_plus), || {
                format!("g={g} N={n} d={d} {w}: formula ({}, {}), chi {via:?}", fd.n_minus, fd.n_plus)
            }),
            Err(e) => r.error(e, || format!("{w}")),
        }
    }
    r.finish("chi-par", format!("{trials} random walls: closed formula = -chi_par - 1"))
}

fn canonical_walls(cfg: &VerifyConfig) -> SuiteReport {
    let mut r = Recorder::new();
    for n in points_range(cfg, 2..=9) {
        for w in enumerate_walls(n, Parity::Odd) {
            let c = match canonical_wall(&w, n) {
                Ok(c) => c,
                Err(e) => {
                    r.error(e, || format!("{w}"));
                    continue;
                }
            };
            let image = c.witness.apply_wall(&w);
            let standard = Wall::standard(c.l, n);
            r.check(
                matches!((&image, &standard), (Ok((img, neg)), Ok(std)) if img == std && *neg == c.negated),
                || format!("N={n} {w}: witness does not reach W({})", c.l),
            );
            for g in genus_range(cfg, 2..=4) {
                let a = flip_type(&w, g, n, false).expect("valid");
                let b = flip_type(&standard.clone().expect("checked"), g, n, false).expect("valid");
                let mut pa = [a.n_minus, a.n_plus];
                let mut pb = [b.n_minus, b.n_plus];
                pa.sort();
                pb.sort();
                r.check(pa == pb, || format!("N={n} g={g} {w}: type {pa:?} vs W({}) {pb:?}", c.l));
            }
        }
    }
    r.finish("canonical-walls", "every odd wall reduces to W(l) with the same flip type".into())
}

fn bd_identity(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut r = Recorder::new();
    let (mut minus, mut plus, mut total) = (0usize, 0usize, 0usize);
    for n in points_range(cfg, 3..=10) {
        let base = exponents(&Weight::near_origin(n, 3)).expect("generic");
        let binoms: Vec<i64> = (0..=n as u64).map(|j| binomial(n as u64, j) as i64).collect();
        r.check(base.d == binoms && base.b.iter().all(|&b| b == 0), || {
            format!("N={n}: near-origin table {:?}", base)
        });
        for _ in 0..cfg.trials {
            let a = sample_generic_weight(n, Parity::Odd, rng);
            let t = exponents(&a).expect("generic");
            let chk = t.check_identity();
            total += 1;
            minus += chk.minus_holds as usize;
            plus += chk.plus_holds as usize;
            r.check(chk.minus_holds && chk.tail_vanishes, || format!("N={n} α={a}: {t:?}"));
            r.check(t.b.iter().all(|&b| b >= 0), || format!("N={n} α={a}: negative b {:?}", t.b));
        }
    }
    let sign = match (minus == total, plus == total) {
        (true, false) => "minus",
        (false, true) => "plus",
        (true, true) => "both",
        (false, false) => "neither",
    };
    r.finish(
        "bd-identity",
        format!(
            "sign holding in (1-x)(1-x^2)B = (1+x)^N -/+ D: {sign} (minus {minus}/{total}, plus {plus}/{total})"
        ),
    )
}

/// Midpoints between consecutive crossings of the segment `from → to`.
fn chamber_samples(from: &Weight, to: &Weight, ts: &[BigRational]) -> Result<Vec<Weight>> {
    let mut cuts = vec![BigRational::from_integer(0.into())];
    cuts.extend(ts.iter().cloned());
    cuts.push(BigRational::from_integer(1.into()));
    cuts.windows(2)
        .map(|p| from.lerp(to, &((&p[0] + &p[1]) / BigRational::from_integer(2.into()))))
        .collect()
}

fn increment(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut r = Recorder::new();
    for n in points_range(cfg, 3..=7) {
        for _ in 0..cfg.trials {
            let from = sample_generic_weight(n, Parity::Odd, rng);
            let to = sample_generic_weight(n, Parity::Odd, rng);
            let Ok(crossings) = segment_crossings(&from, &to, Parity::Odd) else { continue };
            let ts: Vec<BigRational> = crossings.iter().map(|c| c.t.clone()).collect();
            let samples = chamber_samples(&from, &to, &ts).expect("interior points");
            for (i, c) in crossings.iter().enumerate() {
                let before = exponents(&samples[i]).expect("generic").d_poly();
                let after = exponents(&samples[i + 1]).expect("generic").d_poly();
                let diff = match c.direction {
                    Direction::PlusToMinus => &before - &after,
                    Direction::MinusToPlus => &after - &before,
                };
                r.check(diff == increment_law(&c.wall, n), || format!("N={n} {}: D jump {diff}", c.wall));
            }
        }
    }
    r.finish("increment-law", "D(α+) - D(α-) matches the predicted four-term jump".into())
}

fn worked_examples(cfg: &VerifyConfig) -> SuiteReport {
    let mut r = Recorder::new();
    let jac = MotiveExpr::atom(MotiveAtom::JacC);
    for g in genus_range(cfg, 2..=5) {
        let ctx = CurveContext::new(g, 3);
        let inside = Weight::from_ratios(&[(49, 100), (48, 100), (47, 100)]).expect("valid");
        let b = exponents(&inside).map(|t| t.b);
        r.check(b == Ok(vec![1]), || format!("N=3 maximal chamber b = {b:?}"));
        let expected = minimal_chamber_motive(3, 1, false).expect("odd").dsum(&jac.tensor(&jac).twist(g as i64));
        for (label, got) in [
            ("closed formula", closed_formula_parabolic(&inside, &ctx, 1, false)),
            ("path", motive_by_path(&inside, &ctx, 1, false)),
        ] {
            r.check(got.as_ref() == Ok(&expected), || format!("g={g} N=3 {label}: {got:?}"));
        }
        let ctx = CurveContext::new(g, 2);
        let expected = minimal_chamber_motive(2, 1, false).expect("odd");
        for a in [[(1, 10), (1, 5)], [(9, 10), (4, 5)], [(1, 10), (19, 20)]] {
            let a = Weight::from_ratios(&a).expect("valid");
            let got = motive_by_path(&a, &ctx, 1, false);
            r.check(got.as_ref() == Ok(&expected), || format!("g={g} N=2 α={a}: {got:?}"));
        }
    }
    r.finish("worked-examples", "N=2 and N=3 examples reproduced".into())
}

fn path_closed(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut r = Recorder::new();
    let trials = cfg.trials.max(1) * 10;
    for _ in 0..trials {
        let g = cfg.g.unwrap_or_else(|| rng.gen_range(2..=5));
        let n = cfg.n.unwrap_or_else(|| rng.gen_range(2..=7));
        let ctx = CurveContext::new(g, n as u32);
        let a = sample_generic_weight(n, Parity::Odd, rng);
        let closed = closed_formula_parabolic(&a, &ctx, 1, false);
        let path = motive_by_path(&a, &ctx, 1, false);
        r.check(closed.is_ok() && closed == path, || format!("g={g} N={n} α={a}: {closed:?} vs {path:?}"));
        let via = sample_generic_weight(n, Parity::Odd, rng);
        let bent = walk(&[Weight::near_origin(n, 5), via.clone(), a.clone()], &ctx, 1, false);
        match bent {
            Ok(rep) => r.check(Ok(&rep.motive) == closed.as_ref(), || {
                format!("g={g} N={n} α={a} via {via}: path dependence")
            }),
            Err(Error::DegeneratePath { .. }) => {}
            Err(e) => r.error(e, || format!("g={g} N={n} α={a} via {via}")),
        }
    }
    r.finish("path-closed", format!("{trials} random weights: path walk = closed formula, path independent"))
}

fn hecke_invariance(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut r = Recorder::new();
    for n in points_range(cfg, 2..=6) {
        for g in genus_range(cfg, 2..=3) {
            let ctx = CurveContext::new(g, n as u32);
            for _ in 0..cfg.trials {
                let a = sample_generic_weight(n, Parity::Odd, rng);
                let i = rng.gen_range(1..n);
                let b = hecke_action(&a, i).expect("valid index");
                let p = |w: &Weight| {
                    closed_formula_parabolic(w, &ctx, 1, false)
                        .and_then(|m| poincare(&expand_rational(&m, &ctx), &ctx))
                };
                let (pa, pb) = (p(&a), p(&b));
                r.check(pa.is_ok() && pa == pb, || format!("g={g} N={n} α={a} i={i}: {pa:?} vs {pb:?}"));
            }
        }
    }
    r.finish("hecke-invariance", "Poincaré polynomial unchanged by paired Hecke moves".into())
}

fn nl_poincare(g: u32) -> Poly {
    let ctx = CurveContext::new(g, 0);
    poincare(&expand_rational(&MotiveExpr::atom(MotiveAtom::ModuliNL { d: 1 }), &ctx), &ctx).expect("expanded")
}

fn thaddeus(cfg: &VerifyConfig) -> SuiteReport {
    let mut r = Recorder::new();
    r.check(nl_poincare(2) == Poly::new(vec![1, 0, 1, 4, 1, 0, 1]), || format!("g=2: {}", nl_poincare(2)));
    for g in genus_range(cfg, 2..=6) {
        let expected = nl_poincare(g);
        for delta in 0..=2 {
            let got = thaddeus_poincare_nl(g, delta);
            r.check(got.as_ref() == Ok(&expected), || format!("g={g} δ={delta}: {got:?} vs {expected}"));
        }
    }
    r.finish("thaddeus", "pair-flip recursion = expansion of N_L, independent of δ".into())
}

fn product_law(cfg: &VerifyConfig) -> SuiteReport {
    let mut r = Recorder::new();
    for g in genus_range(cfg, 0..=8) {
        let ctx = CurveContext::new(g, 0);
        let n = poincare(&expand_rational(&MotiveExpr::atom(MotiveAtom::ModuliN { d: 1 }), &ctx), &ctx);
        let expected = &nl_poincare(g) * &Poly::one_plus_t_pow(2 * g);
        r.check(n.as_ref() == Ok(&expected), || format!("g={g}: {n:?} vs {expected}"));
    }
    r.finish("product-law", "P(N) = P(N_L)(1+t)^{2g}".into())
}

/// `⊕_{i=⌈a/2⌉}^{a} CH^{a−i}(Sym^i C)`.
pub fn stable_chow(a: i64) -> ChowDecomposition {
    let mut out = ChowDecomposition::default();
    for i in (a + 1) / 2..=a {
        let atoms = if i == 0 { vec![] } else { vec![MotiveAtom::SymC { n: i as u32 }] };
        out.add(ChowSymbol { codim: a - i, atoms }, 1);
    }
    out
}

fn chow(cfg: &VerifyConfig) -> SuiteReport {
    let mut r = Recorder::new();
    let nl = MotiveExpr::atom(MotiveAtom::ModuliNL { d: 1 });
    for g in genus_range(cfg, 2..=10) {
        let ctx = CurveContext::new(g, 0);
        let e = expand_rational(&nl, &ctx);
        let got = chow_decomposition(&e, 1, &ctx);
        let mut expected = ChowDecomposition::default();
        expected.add(ChowSymbol { codim: 0, atoms: vec![MotiveAtom::SymC { n: 1 }] }, 1);
        r.check(got.as_ref() == Ok(&expected), || format!("g={g} CH^1: {got:?}"));
        for a in 0..=6i64 {
            if g as i64 > a {
                let got = chow_decomposition(&e, a, &ctx);
                r.check(got.as_ref() == Ok(&stable_chow(a)), || format!("g={g} a={a}: {got:?}"));
            }
        }
    }
    r.finish("chow", "CH^1(N_L) = CH^0(C) and the stable range formula".into())
}

fn alpha_independence(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut r = Recorder::new();
    for g in genus_range(cfg, 2..=3) {
        for n in points_range(cfg, 0..=4) {
            let ctx = CurveContext::new(g, n as u32);
            let expected = motive_par_higgs(&ctx, 1, false)
                .and_then(|m| poincare(&expand_rational(&m, &ctx), &ctx))
                .expect("closed formula");
            for _ in 0..cfg.trials {
                let a = sample_generic_weight(n, Parity::Odd, rng);
                let got = bb_fixed_loci_par_higgs(&ctx, 1, &a, false).and_then(|c| bb_poincare(&c, &ctx));
                r.check(got.as_ref() == Ok(&expected), || format!("g={g} N={n} α={a}: {got:?} vs {expected}"));
            }
        }
    }
    r.finish("alpha-independence", "BB-assembled Poincaré polynomial independent of α".into())
}

fn lagrangian(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut r = Recorder::new();
    for g in genus_range(cfg, 1..=5) {
        for n in points_range(cfg, 0..=4) {
            let ctx = CurveContext::new(g, n as u32);
            for _ in 0..cfg.trials.max(1) {
                let a = sample_generic_weight(n, Parity::Odd, rng);
                for fixed in [false, true] {
                    let full = if fixed { 3 * g as i64 - 3 } else { 4 * g as i64 - 3 } + n as i64;
                    for c in bb_fixed_loci_par_higgs(&ctx, 1, &a, fixed).expect("generic").iter().skip(1) {
                        let dim = bb_base_dimension(c, g, fixed).expect("type (1,1)");
                        r.check(dim + c.codim == full, || {
                            format!("g={g} N={n} α={a} fixed={fixed}: {c:?} gives {}", dim + c.codim)
                        });
                    }
                }
            }
        }
    }
    r.finish("lagrangian", "dim(base) + codim = dim of the moduli of stable bundles".into())
}

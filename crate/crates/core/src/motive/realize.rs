//! Realization functors: Poincaré polynomial, Euler characteristic,
//! dimension and formal Chow-group decomposition, plus the rational
//! expansion of the rank-2 moduli atoms.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{normalize, CurveContext, MotiveAtom, MotiveExpr, MotiveTerm};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Power series in `x` with polynomial-in-`t` coefficients, truncated at `x^order`.
struct TruncatedSeries {
    coeffs: Vec<Poly>,
}

impl TruncatedSeries {
    fn from_fn(order: usize, f: impl Fn(usize) -> Poly) -> Self {
        TruncatedSeries { coeffs: (0..=order).map(f).collect() }
    }

    fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.coeffs.len().min(other.coeffs.len()) - 1;
        let mut coeffs = vec![Poly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += &(a * b);
            }
        }
        TruncatedSeries { coeffs }
    }
}

fn binomial(n: u64, k: u64) -> i128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// Poincaré polynomial of `Sym^n C` for a genus-`g` curve: the coefficient of
/// `x^n` in `(1 + x t)^{2g} / ((1 - x)(1 - x t^2))`.
pub fn sym_poincare(n: u32, g: u32) -> Poly {
    let order = n as usize;
    let odd = TruncatedSeries::from_fn(order, |k| Poly::monomial(binomial(2 * g as u64, k as u64), k));
    let even0 = TruncatedSeries::from_fn(order, |_| Poly::one());
    let even2 = TruncatedSeries::from_fn(order, |k| Poly::monomial(1, 2 * k));
    odd.mul(&even0).mul(&even2).coeffs.swap_remove(order)
}

fn atom_poincare(atom: &MotiveAtom, ctx: &CurveContext) -> Result<Poly> {
    Ok(match *atom {
        MotiveAtom::Unit => Poly::one(),
        MotiveAtom::SymC { n } => sym_poincare(n, ctx.g),
        MotiveAtom::JacC | MotiveAtom::PicC { .. } => Poly::one_plus_t_pow(2 * ctx.g),
        MotiveAtom::TildeSymC { n } => ctx
            .tilde_sym_betti
            .as_ref()
            .and_then(|t| t.get(&n))
            .cloned()
            .ok_or(Error::MissingBettiTable { n })?,
        MotiveAtom::ProjSpace { m } => Poly::projective_space(m),
        MotiveAtom::ModuliN { .. } | MotiveAtom::ModuliNL { .. } => return Err(Error::UnexpandedModuli),
    })
}

/// Poincaré polynomial realization; additive and multiplicative, with
/// `(n)` realized as `t^{2n}`.
pub fn poincare(expr: &MotiveExpr, ctx: &CurveContext) -> Result<Poly> {
    let mut total = Poly::zero();
    for term in expr.terms() {
        let twist = usize::try_from(term.twist).map_err(|_| {
            Error::InvalidWeight(format!("negative Tate twist {} has no Poincaré realization", term.twist))
        })?;
        let mut p = Poly::monomial(term.coeff as i128, 2 * twist);
        for atom in &term.atoms {
            p = &p * &atom_poincare(atom, ctx)?;
        }
        total += &p;
    }
    Ok(total)
}

/// Euler characteristic: the Poincaré polynomial at `t = -1`.
pub fn euler(expr: &MotiveExpr, ctx: &CurveContext) -> Result<i128> {
    Ok(poincare(expr, ctx)?.eval(-1))
}

pub fn dimension(atom: &MotiveAtom, ctx: &CurveContext) -> u32 {
    let g = ctx.g;
    match *atom {
        MotiveAtom::Unit => 0,
        MotiveAtom::SymC { n } | MotiveAtom::TildeSymC { n } => n,
        MotiveAtom::JacC | MotiveAtom::PicC { .. } => g,
        MotiveAtom::ProjSpace { m } => m,
        MotiveAtom::ModuliN { .. } => (4 * g).saturating_sub(3),
        MotiveAtom::ModuliNL { .. } => (3 * g).saturating_sub(3),
    }
}

/// Rational motive of `N_L(2, d)` in terms of symmetric powers:
/// `h(Sym^{g-1} C)(g-1) ⊕ ⊕_{i=0}^{g-2} h(Sym^i C) ⊗ (Q(i) ⊕ Q(3g-3-2i))`.
/// Empty for `g = 0` (`Sym^{-1} C = ∅`).
fn nl_expansion(g: u32) -> MotiveExpr {
    if g == 0 {
        return MotiveExpr::zero();
    }
    let g = g as i64;
    let mut raw = vec![MotiveTerm::new(vec![MotiveAtom::SymC { n: (g - 1) as u32 }], g - 1, 1)];
    for i in 0..=g - 2 {
        let sym = MotiveAtom::SymC { n: i as u32 };
        raw.push(MotiveTerm::new(vec![sym], i, 1));
        raw.push(MotiveTerm::new(vec![sym], 3 * g - 3 - 2 * i, 1));
    }
    normalize(raw)
}

/// Replace `N_L` and `N` atoms by their rational expansions (`N = N_L ⊗ Jac`).
pub fn expand_rational(expr: &MotiveExpr, ctx: &CurveContext) -> MotiveExpr {
    let nl = nl_expansion(ctx.g);
    let n = nl.tensor(&MotiveExpr::atom(MotiveAtom::JacC));
    let mut out = expr.clone();
    for atom in expr.atom_set() {
        match atom {
            MotiveAtom::ModuliNL { .. } => out = out.substitute(&atom, &nl),
            MotiveAtom::ModuliN { .. } => out = out.substitute(&atom, &n),
            _ => {}
        }
    }
    if ctx.collapse_pic {
        out.collapse_pic()
    } else {
        out
    }
}

/// `CH^codim(∏ atoms)`; an empty atom list is a point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ChowSymbol {
    pub codim: i64,
    pub atoms: Vec<MotiveAtom>,
}

impl fmt::Display for ChowSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let space = if self.atoms.is_empty() {
            "pt".to_string()
        } else {
            self.atoms
                .iter()
                .map(|a| {
                    let s = a.to_string();
                    s.strip_prefix("h(").and_then(|s| s.strip_suffix(')')).map(str::to_string).unwrap_or(s)
                })
                .collect::<Vec<_>>()
                .join(" x ")
        };
        write!(f, "CH^{}({space})", self.codim)?;
        if self.codim == 0 && self.atoms.len() <= 1 {
            write!(f, "[rank 1]")?;
        }
        Ok(())
    }
}

/// Formal sum of Chow-group symbols with integer multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ChowDecomposition {
    pub terms: BTreeMap<ChowSymbol, i64>,
}

impl ChowDecomposition {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&mut self, sym: ChowSymbol, mult: i64) {
        let c = self.terms.entry(sym.clone()).or_insert(0);
        *c += mult;
        if *c == 0 {
            self.terms.remove(&sym);
        }
    }
}

impl fmt::Display for ChowDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, &m)| if m == 1 { s.to_string() } else { format!("{s}^{m}") })
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// Each term `c · ⊗A (n)` contributes `c · CH^{cod-n}(∏A)`, dropped when the
/// codimension is negative or exceeds `dim ∏A`.
pub fn chow_decomposition(expr: &MotiveExpr, cod: i64, ctx: &CurveContext) -> Result<ChowDecomposition> {
    if expr.contains_moduli() {
        return Err(Error::UnexpandedModuli);
    }
    let mut out = ChowDecomposition::default();
    for term in expr.terms() {
        let k = cod - term.twist;
        let dim: i64 = term.atoms.iter().map(|a| dimension(a, ctx) as i64).sum();
        if k < 0 || k > dim {
            continue;
        }
        out.add(ChowSymbol { codim: k, atoms: term.atoms }, term.coeff);
    }
    Ok(out)
}

//! Closed formulas for Higgs and parabolic Higgs moduli, the fixed loci of
//! the scaling action, the pair-flip recursion for `P(N_L)`, and even degree
//! parabolic moduli via a Hecke modification.

use num::{BigRational, Integer, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::motive::{expand_rational, poincare, sym_poincare, CurveContext, MotiveAtom, MotiveExpr, MotiveTerm};
use crate::poly::Poly;
use crate::wallcross::{closed_formula_parabolic, hecke_modify, minimal_chamber_motive};
use crate::weights::{ensure_generic, Parity, Weight};

fn require_odd(d: i64) -> Result<()> {
    if d.rem_euclid(2) == 0 {
        return Err(Error::EvenDegree(d));
    }
    Ok(())
}

fn binomial(n: u32, k: u32) -> i64 {
    if k > n {
        return 0;
    }
    (0..k as i64).fold(1, |acc, i| acc * (n as i64 - i) / (i + 1))
}

/// `a_{d,j} = g − j + (d−1)/2`.
pub fn pic_degree(g: u32, d: i64, j: i64) -> i64 {
    g as i64 - j + (d - 1) / 2
}

fn stratum_base(g: u32, d: i64, j: i64, sym: i64, fixed_det: bool) -> Vec<MotiveAtom> {
    let n = sym as u32;
    if fixed_det {
        vec![MotiveAtom::TildeSymC { n }]
    } else {
        vec![MotiveAtom::PicC { a: pic_degree(g, d, j) }, MotiveAtom::SymC { n }]
    }
}

fn higgs(ctx: &CurveContext, d: i64, fixed_det: bool) -> Result<MotiveExpr> {
    require_odd(d)?;
    let g = ctx.g;
    let moduli = if fixed_det { MotiveAtom::ModuliNL { d } } else { MotiveAtom::ModuliN { d } };
    let mut raw = vec![MotiveTerm::new(vec![moduli], 0, 1)];
    for j in 1..g as i64 {
        raw.push(MotiveTerm::new(stratum_base(g, d, j, 2 * j - 1, fixed_det), 3 * g as i64 - 2 * j - 2, 1));
    }
    Ok(ctx.normalize(raw))
}

/// `h(N) ⊕ ⊕_{j=1}^{g−1} h(Pic^{a_{d,j}} C) ⊗ h(Sym^{2j−1} C)(3g−2j−2)`.
pub fn motive_higgs(ctx: &CurveContext, d: i64) -> Result<MotiveExpr> {
    higgs(ctx, d, false)
}

/// `h(N_L) ⊕ ⊕_{j=1}^{g−1} h(~Sym^{2j−1} C)(3g−2j−2)`.
pub fn motive_higgs_fixed_det(ctx: &CurveContext, d: i64) -> Result<MotiveExpr> {
    higgs(ctx, d, true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BBKind {
    #[serde(rename = "vector_bundle_locus")]
    VectorBundleLocus,
    #[serde(rename = "type_1_1")]
    Type11,
}

/// One fixed component of the scaling action with the codimension of its
/// attracting cell. Type `(1,1)` components are indexed by the degree `d'`
/// of the destabilising line subbundle and its flag data `m'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BBComponent {
    pub kind: BBKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_prime: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_prime: Option<Vec<u8>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    pub codim: i64,
    pub base: MotiveExpr,
}

/// Fixed loci for a generic weight: the moduli of stable parabolic bundles
/// (codimension 0) and every `(d', m')` with
/// `d + Σ α_i (1 − 2m'_i) < 2d' ≤ 2g − 2 + N + d − |m'|`.
pub fn bb_fixed_loci_par_higgs(
    ctx: &CurveContext,
    d: i64,
    alpha: &Weight,
    fixed_det: bool,
) -> Result<Vec<BBComponent>> {
    require_odd(d)?;
    ensure_generic(alpha, Parity::Odd)?;
    let g = ctx.g as i64;
    let n = alpha.len();
    let mut out = vec![BBComponent {
        kind: BBKind::VectorBundleLocus,
        d_prime: None,
        m_prime: None,
        j: None,
        l: None,
        codim: 0,
        base: ctx.normalize(closed_formula_parabolic(alpha, ctx, d, fixed_det)?.terms()),
    }];
    let mut locus = Vec::new();
    for mask in 0u64..1 << n {
        let m: Vec<u8> = (0..n).map(|i| (mask >> i & 1) as u8).collect();
        let l = mask.count_ones() as i64;
        let mut lower = BigRational::from_integer(d.into());
        for (a, &mi) in alpha.coords().iter().zip(&m) {
            if mi == 1 {
                lower -= a;
            } else {
                lower += a;
            }
        }
        // Smallest d' with 2d' > lower.
        let d_min: num::BigInt = (lower / BigRational::from_integer(2.into())).floor().to_integer() + 1;
        let d_min = d_min.to_i64().expect("degree fits in i64");
        let d_max = Integer::div_floor(&(2 * g - 2 + n as i64 + d - l), &2);
        for dp in d_min..=d_max {
            let j = g - dp + (d - 1) / 2;
            let sym = 2 * j + n as i64 - l - 1;
            let codim = 3 * g - 2 * j + l - 2;
            let base = ctx.normalize([MotiveTerm::new(stratum_base(ctx.g, d, j, sym, fixed_det), 0, 1)]);
            locus.push(BBComponent {
                kind: BBKind::Type11,
                d_prime: Some(dp),
                m_prime: Some(m.clone()),
                j: Some(j),
                l: Some(l as u32),
                codim,
                base,
            });
        }
    }
    locus.sort_by_key(|c| (c.l, c.j, c.m_prime.clone()));
    out.extend(locus);
    Ok(out)
}

/// Dimension of the base of a type `(1,1)` component.
pub fn bb_base_dimension(c: &BBComponent, g: u32, fixed_det: bool) -> Option<i64> {
    let (j, l) = (c.j?, c.l? as i64);
    let n = c.m_prime.as_ref()?.len() as i64;
    let sym = 2 * j + n - l - 1;
    Some(if fixed_det { sym } else { sym + g as i64 })
}

/// `⊕ base(codim)` over the components.
pub fn bb_motive(components: &[BBComponent]) -> MotiveExpr {
    components
        .iter()
        .fold(MotiveExpr::zero(), |acc, c| acc.dsum(&c.base.twist(c.codim)))
}

pub fn bb_poincare(components: &[BBComponent], ctx: &CurveContext) -> Result<Poly> {
    poincare(&expand_rational(&bb_motive(components), ctx), ctx)
}

/// `h(N) ⊗ h(P^1)^{⊗N} ⊕ ⊕_{l, j} (h(Pic^{a_{d,j}} C) ⊗ h(Sym^{2j+N−l−1} C))(3g−2j+l−2)^{⊕ C(N,l)}`
/// over `0 ≤ l ≤ N`, `(l+1−N)/2 ≤ j ≤ g−1`. `N` is `ctx.n_points`.
pub fn motive_par_higgs(ctx: &CurveContext, d: i64, fixed_det: bool) -> Result<MotiveExpr> {
    require_odd(d)?;
    let n = ctx.n_points;
    let g = ctx.g as i64;
    let mut raw: Vec<MotiveTerm> = minimal_chamber_motive(n as usize, d, fixed_det)?.terms().collect();
    for l in 0..=n {
        let lo = Integer::div_ceil(&(l as i64 + 1 - n as i64), &2);
        for j in lo..g {
            let sym = 2 * j + n as i64 - l as i64 - 1;
            raw.push(MotiveTerm::new(
                stratum_base(ctx.g, d, j, sym, fixed_det),
                3 * g - 2 * j + l as i64 - 2,
                binomial(n, l),
            ));
        }
    }
    Ok(ctx.normalize(raw))
}

/// Intermediate value of the pair-flip recursion, after `step` flips.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThaddeusState {
    pub delta: u32,
    pub step: u32,
    pub poly: Poly,
}

/// States of the recursion for `d = 4g − 3 + 2δ`: start at `P(P^{5g−5+2δ})`,
/// the flip number `i` has type `(i, 5g−7+2δ−2i)` and centre `Sym^{i+1} C`.
pub fn thaddeus_states(g: u32, delta: u32) -> Result<Vec<ThaddeusState>> {
    if g < 2 {
        return Err(Error::GenusTooSmall { g, min: 2 });
    }
    let (gi, di) = (g as i64, delta as i64);
    let mut poly = Poly::projective_space((5 * gi - 5 + 2 * di) as u32);
    let mut states = vec![ThaddeusState { delta, step: 0, poly: poly.clone() }];
    for i in 0..=(2 * gi - 3 + di) {
        let m = i;
        let l = 5 * gi - 7 + 2 * di - 2 * i;
        let fibres = &Poly::projective_space(l as u32) - &Poly::projective_space(m as u32);
        poly += &(&sym_poincare((i + 1) as u32, g) * &fibres);
        states.push(ThaddeusState { delta, step: (i + 1) as u32, poly: poly.clone() });
    }
    Ok(states)
}

/// `P(N_L)` from the last state divided by `P(P^{2g−2+2δ})`.
pub fn thaddeus_poincare_nl(g: u32, delta: u32) -> Result<Poly> {
    let last = thaddeus_states(g, delta)?.pop().expect("non-empty").poly;
    last.div_exact(&Poly::projective_space(2 * g + 2 * delta - 2))
        .ok_or(Error::NonExactDivision)
}

/// Even degree: Hecke modify at the first point, then use the odd formula in degree `d − 1`.
pub fn motive_parabolic_even(ctx: &CurveContext, d: i64, alpha: &Weight, fixed_det: bool) -> Result<MotiveExpr> {
    if d.rem_euclid(2) == 1 {
        return Err(Error::OddDegree(d));
    }
    ensure_generic(alpha, Parity::Even)?;
    let (d1, a1) = hecke_modify(d, alpha, 1)?;
    closed_formula_parabolic(&a1, ctx, d1, fixed_det)
}

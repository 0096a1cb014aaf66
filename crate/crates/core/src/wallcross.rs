//! Motive-level wall-crossing for rank-2 parabolic moduli of odd degree.
//!
//! Starting from the chamber of the origin, where the moduli space is an
//! iterated `P^1`-bundle over `N` (resp. `N_L`), each wall crossing changes
//! the motive by twisted copies of the flip centre. The closed formula packs
//! all of these into the exponents `b_j(α)`.

use num::{BigRational, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::motive::{CurveContext, MotiveAtom, MotiveExpr};
use crate::poly::Poly;
use crate::weights::{
    chamber_signature, ensure_generic, flip_type, MaskTable, segment_crossings, Direction, FlipData, Parity, Wall,
    Weight,
};

fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentTable {
    pub d: Vec<i64>,
    pub c: Vec<i64>,
    pub b: Vec<i64>,
}

/// Which sign of `(1−x)(1−x²) B(x) = (1+x)^N ∓ D(x)` holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub minus_holds: bool,
    pub plus_holds: bool,
    /// `b_j = 0` for `j > N − 3` in the untruncated convolution.
    pub tail_vanishes: bool,
}

impl ExponentTable {
    pub fn n(&self) -> usize {
        self.d.len() - 1
    }

    /// `D(x) = Σ d_j x^j`.
    pub fn d_poly(&self) -> Poly {
        Poly::new(self.d.iter().map(|&v| v as i128).collect())
    }

    /// `B(x) = Σ b_j x^j`.
    pub fn b_poly(&self) -> Poly {
        Poly::new(self.b.iter().map(|&v| v as i128).collect())
    }

    pub fn check_identity(&self) -> IdentityCheck {
        let n = self.n();
        let lhs = &Poly::new(vec![1, -1, -1, 1]) * &self.b_poly();
        let binom = Poly::one_plus_t_pow(n as u32);
        let tail = (n.saturating_sub(2)..=n + 2).all(|j| b_coefficient(&self.c, j) == 0);
        IdentityCheck {
            minus_holds: lhs == &binom - &self.d_poly(),
            plus_holds: lhs == &binom + &self.d_poly(),
            tail_vanishes: n < 3 || tail,
        }
    }
}

/// `b_j = Σ_{i=0}^{j} ⌊(i+2)/2⌋ c_{j−i}`, with `c_k = 0` outside `0..=N`.
fn b_coefficient(c: &[i64], j: usize) -> i64 {
    (0..=j)
        .filter(|&i| j - i < c.len())
        .map(|i| ((i as i64 + 2) / 2) * c[j - i])
        .sum()
}

/// `d_j` counts `I ⊆ {1..N}` with `|I| ≡ j (mod 2)` and
/// `j − 1 < |I| + Σ_{I^c} α − Σ_I α < j + 1`; `c_j = C(N,j) − d_j`.
pub fn exponents(alpha: &Weight) -> Result<ExponentTable> {
    ensure_generic(alpha, Parity::Odd)?;
    let n = alpha.len();
    let d = match MaskTable::new(alpha) {
        Some(t) => d_counts(&t, n),
        None => d_counts_exact(alpha),
    };
    let c: Vec<i64> = d.iter().enumerate().map(|(j, &dj)| binomial(n, j) - dj).collect();
    let b = (0..n.saturating_sub(2)).map(|j| b_coefficient(&c, j)).collect();
    Ok(ExponentTable { d, c, b })
}

fn d_counts(t: &MaskTable, n: usize) -> Vec<i64> {
    let mut d = vec![0i64; n + 1];
    for (mask, v) in t.values.iter().enumerate() {
        let size = mask.count_ones() as i128;
        let v = size * t.denom + v;
        for (j, slot) in d.iter_mut().enumerate() {
            let j = j as i128;
            if (j - size) % 2 == 0 && (j - 1) * t.denom < v && v < (j + 1) * t.denom {
                *slot += 1;
            }
        }
    }
    d
}

fn d_counts_exact(alpha: &Weight) -> Vec<i64> {
    let n = alpha.len();
    let mut d = vec![0i64; n + 1];
    for mask in 0u64..1 << n {
        let size = mask.count_ones() as i64;
        let mut v = BigRational::from_integer(size.into());
        for (i, a) in alpha.coords().iter().enumerate() {
            if mask >> i & 1 == 1 {
                v -= a;
            } else {
                v += a;
            }
        }
        for (j, slot) in d.iter_mut().enumerate() {
            let j = j as i64;
            if (j - size) % 2 != 0 {
                continue;
            }
            let lo = BigRational::from_integer((j - 1).into());
            let hi = BigRational::from_integer((j + 1).into());
            if lo < v && v < hi {
                *slot += 1;
            }
        }
    }
    d
}

fn centre_block(fd: &FlipData, lo: i64, hi: i64) -> MotiveExpr {
    (lo + 1..=hi).fold(MotiveExpr::zero(), |acc, j| acc.dsum(&fd.center.twist(j)))
}

/// Signed change of the motive when crossing in `direction`.
///
/// Going from `H^-` to `H^+` replaces the `P^{n_-}`-bundle by the
/// `P^{n_+}`-bundle: `⊕_{n_-<j≤n_+} Z(j) ⊖ ⊕_{n_+<j≤n_-} Z(j)`.
pub fn crossing_delta(fd: &FlipData, direction: Direction) -> MotiveExpr {
    let up = centre_block(fd, fd.n_minus, fd.n_plus);
    let down = centre_block(fd, fd.n_plus, fd.n_minus);
    let delta = &up - &down;
    match direction {
        Direction::MinusToPlus => delta,
        Direction::PlusToMinus => -&delta,
    }
}

pub fn cross_wall(m: &MotiveExpr, fd: &FlipData, direction: Direction) -> MotiveExpr {
    m.dsum(&crossing_delta(fd, direction))
}

/// Tensor with `h(P^1)^{⊗N}`: forgetting a full flag at each point.
pub fn flag_degenerate(m: &MotiveExpr, n: usize) -> MotiveExpr {
    m.tensor(&MotiveExpr::p1_power(n as u32))
}

fn moduli_atom(d: i64, fixed_det: bool) -> Result<MotiveAtom> {
    if fixed_det {
        MotiveAtom::moduli_nl(d)
    } else {
        MotiveAtom::moduli_n(d)
    }
}

/// `h(N) ⊗ h(P^1)^{⊗N}` (or `N_L`), the motive for small generic weights.
pub fn minimal_chamber_motive(n: usize, d: i64, fixed_det: bool) -> Result<MotiveExpr> {
    Ok(flag_degenerate(&MotiveExpr::atom(moduli_atom(d, fixed_det)?), n))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathStep {
    #[serde(serialize_with = "ser_rational")]
    pub t: BigRational,
    pub segment: usize,
    pub wall: Wall,
    pub direction: Direction,
    pub n_minus: i64,
    pub n_plus: i64,
    pub added: MotiveExpr,
    pub removed: MotiveExpr,
}

fn ser_rational<S: serde::Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathReport {
    pub waypoints: Vec<Weight>,
    pub steps: Vec<PathStep>,
    pub motive: MotiveExpr,
}

fn in_origin_chamber(alpha: &Weight) -> Result<bool> {
    Ok(chamber_signature(alpha, Parity::Odd)?.signs.iter().all(|&s| s > 0))
}

fn split_signed(e: &MotiveExpr) -> (MotiveExpr, MotiveExpr) {
    let pos = MotiveExpr::from_terms(e.terms().filter(|t| t.coeff > 0));
    let neg = MotiveExpr::from_terms(e.terms().filter(|t| t.coeff < 0)).scale(-1);
    (pos, neg)
}

/// Walk the polyline through `waypoints`, whose first point must lie in the
/// chamber of the origin, applying one flip rewrite per wall crossed.
pub fn walk(waypoints: &[Weight], ctx: &CurveContext, d: i64, fixed_det: bool) -> Result<PathReport> {
    let first = waypoints
        .first()
        .ok_or_else(|| Error::DegeneratePath { reason: "empty path".into() })?;
    let n = first.len();
    if !in_origin_chamber(first)? {
        return Err(Error::DegeneratePath { reason: format!("{first} is not in the chamber of the origin") });
    }
    let mut motive = minimal_chamber_motive(n, d, fixed_det)?;
    let mut steps = Vec::new();
    for (segment, pair) in waypoints.windows(2).enumerate() {
        for crossing in segment_crossings(&pair[0], &pair[1], Parity::Odd)? {
            let fd = flip_type(&crossing.wall, ctx.g, n, fixed_det)?;
            let delta = crossing_delta(&fd, crossing.direction);
            let (added, removed) = split_signed(&delta);
            motive = motive.dsum(&delta);
            steps.push(PathStep {
                t: crossing.t,
                segment,
                wall: crossing.wall,
                direction: crossing.direction,
                n_minus: fd.n_minus,
                n_plus: fd.n_plus,
                added,
                removed,
            });
        }
    }
    if !motive.is_effective() {
        return Err(Error::NotEffective(motive.to_string()));
    }
    Ok(PathReport { waypoints: waypoints.to_vec(), steps, motive })
}

/// Straight path from `α_i = 1/2^{k+i}` to `alpha`, retrying a few values of
/// `k` if the segment passes through an intersection of walls.
pub fn motive_by_path_report(alpha: &Weight, ctx: &CurveContext, d: i64, fixed_det: bool) -> Result<PathReport> {
    if ctx.g < 2 {
        return Err(Error::GenusTooSmall { g: ctx.g, min: 2 });
    }
    if d.rem_euclid(2) == 0 {
        return Err(Error::EvenDegree(d));
    }
    ensure_generic(alpha, Parity::Odd)?;
    let mut last = None;
    for k in 2..16 {
        let start = Weight::near_origin(alpha.len(), k);
        match walk(&[start, alpha.clone()], ctx, d, fixed_det) {
            Err(e @ Error::DegeneratePath { .. }) => last = Some(e),
            other => return other,
        }
    }
    Err(last.expect("at least one attempt"))
}

pub fn motive_by_path(alpha: &Weight, ctx: &CurveContext, d: i64, fixed_det: bool) -> Result<MotiveExpr> {
    motive_by_path_report(alpha, ctx, d, fixed_det).map(|r| r.motive)
}

/// `h(N) ⊗ h(P^1)^{⊗N} ⊕ ⊕_{j=0}^{N−3} Z(g+j)^{⊕ b_j(α)}` with `Z = Jac^2`
/// (resp. `Jac` and `N_L` for fixed determinant).
pub fn closed_formula_parabolic(alpha: &Weight, ctx: &CurveContext, d: i64, fixed_det: bool) -> Result<MotiveExpr> {
    let base = minimal_chamber_motive(alpha.len(), d, fixed_det)?;
    let table = exponents(alpha)?;
    let jac = MotiveExpr::atom(MotiveAtom::JacC);
    let centre = if fixed_det { jac } else { jac.tensor(&jac) };
    let extra = table
        .b
        .iter()
        .enumerate()
        .fold(MotiveExpr::zero(), |acc, (j, &bj)| acc.dsum(&centre.twist(ctx.g as i64 + j as i64).scale(bj)));
    Ok(base.dsum(&extra))
}

/// Hecke modification at point `i`: `(d, α) ↦ (d − 1, α')` with `α'_i = 1 − α_i`.
pub fn hecke_modify(d: i64, alpha: &Weight, i: usize) -> Result<(i64, Weight)> {
    let n = alpha.len();
    if i == 0 || i > n {
        return Err(Error::InvalidIndex { index: i, max: n });
    }
    let mut coords = alpha.coords().to_vec();
    coords[i - 1] = BigRational::from_integer(1.into()) - &coords[i - 1];
    Ok((d - 1, Weight::new(coords)?))
}

/// Whether the path through `waypoints` stays inside one chamber.
pub fn is_constant_path(waypoints: &[Weight]) -> Result<bool> {
    for pair in waypoints.windows(2) {
        if !segment_crossings(&pair[0], &pair[1], Parity::Odd)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Difference `D(α^+) − D(α^-)` predicted for adjacent chambers across `W_{s,I}`:
/// `x^{|I|−2s} − x^{|I|−2s−2} + x^{N−|I|+2s} − x^{N−|I|+2s+2}`.
pub fn increment_law(w: &Wall, n: usize) -> Poly {
    let k = w.size() as usize;
    let s = w.s as usize;
    let a = k - 2 * s;
    let b = n - k + 2 * s;
    let mono = |e: usize| Poly::monomial(1, e);
    &(&(&mono(a) - &mono(a - 2)) + &mono(b)) - &mono(b + 2)
}

/// True when `t` is strictly inside `(0, 1)`.
pub fn is_interior_parameter(t: &BigRational) -> bool {
    t.is_positive() && *t < BigRational::from_integer(1.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motive::{expand_rational, poincare};
    use crate::weights::{perturb, sample_generic_weight, Weight};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Maximal-chamber exponents: `Σ_{0≤s<M, 2s≤l<2M} Σ_{j=l}^{N−3−l} C(N, l−2s) x^j`, `M = (N−2)/4`.
    fn maximal_b(n: usize) -> Vec<i64> {
        let n = n as i64;
        let mut b = vec![0i64; (n - 2).max(0) as usize];
        let mut s = 0;
        while 4 * s < n - 2 {
            let mut l = 2 * s;
            while 2 * l < n - 2 {
                for j in l..=n - 3 - l {
                    b[j as usize] += binomial(n as usize, (l - 2 * s) as usize);
                }
                l += 1;
            }
            s += 1;
        }
        b
    }

    #[test]
    fn near_origin_exponents() {
        for n in 0..=8 {
            let t = exponents(&Weight::near_origin(n, 3)).unwrap();
            let binoms: Vec<i64> = (0..=n).map(|j| binomial(n, j)).collect();
            assert_eq!(t.d, binoms);
            assert!(t.b.iter().all(|&b| b == 0));
            assert_eq!(t.b.len(), n.saturating_sub(2));
        }
    }

    #[test]
    fn integer_and_exact_counts_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 0..=8 {
            let a = sample_generic_weight(n, Parity::Odd, &mut rng);
            assert_eq!(d_counts(&MaskTable::new(&a).unwrap(), n), d_counts_exact(&a));
        }
    }

    #[test]
    fn three_point_centre() {
        let t = exponents(&Weight::centre(3)).unwrap();
        assert_eq!(t.d, vec![0, 4, 4, 0]);
        assert_eq!(t.b, vec![1]);
        let chk = t.check_identity();
        assert!(chk.minus_holds && !chk.plus_holds && chk.tail_vanishes);
    }

    #[test]
    fn near_centre_matches_maximal_formula() {
        for n in 3..=8 {
            let centre = Weight::centre(n);
            let a = perturb(&centre, Parity::Odd, n as u64).unwrap();
            assert_eq!(exponents(&a).unwrap().b, maximal_b(n), "N = {n}");
        }
        assert_eq!(maximal_b(4), vec![1, 1]);
        assert_eq!(maximal_b(5), vec![1, 6, 1]);
    }

    #[test]
    fn identity_holds_for_random_weights() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 3..=7 {
            for _ in 0..10 {
                let a = sample_generic_weight(n, Parity::Odd, &mut rng);
                let chk = exponents(&a).unwrap().check_identity();
                assert!(chk.minus_holds && chk.tail_vanishes, "{a}");
            }
        }
    }

    #[test]
    fn flop_is_identity_and_round_trip() {
        let ctx = CurveContext::new(3, 2);
        let m = minimal_chamber_motive(2, 1, false).unwrap();
        let w = Wall::new(0, &[1, 2], Parity::Odd).unwrap();
        let fd = flip_type(&w, ctx.g, 2, false).unwrap();
        assert_eq!(cross_wall(&m, &fd, Direction::PlusToMinus), m);

        let w = Wall::new(0, &[1, 2, 3], Parity::Odd).unwrap();
        let fd = flip_type(&w, 3, 3, false).unwrap();
        let there = cross_wall(&m, &fd, Direction::PlusToMinus);
        let jac = MotiveExpr::atom(MotiveAtom::JacC);
        assert_eq!(&there - &m, jac.tensor(&jac).twist(3));
        assert_eq!(cross_wall(&there, &fd, Direction::MinusToPlus), m);
    }

    #[test]
    fn worked_examples() {
        for g in 2..5 {
            let ctx = CurveContext::new(g, 3);
            let inside = Weight::from_ratios(&[(49, 100), (48, 100), (47, 100)]).unwrap();
            let jac = MotiveExpr::atom(MotiveAtom::JacC);
            let expected = minimal_chamber_motive(3, 1, false).unwrap().dsum(&jac.tensor(&jac).twist(g as i64));
            assert_eq!(closed_formula_parabolic(&inside, &ctx, 1, false).unwrap(), expected);
            assert_eq!(motive_by_path(&inside, &ctx, 1, false).unwrap(), expected);
            let fixed = closed_formula_parabolic(&inside, &ctx, 1, true).unwrap();
            let expected = minimal_chamber_motive(3, 1, true).unwrap().dsum(&jac.twist(g as i64));
            assert_eq!(fixed, expected);
        }
        let ctx = CurveContext::new(2, 2);
        for a in [[(1, 10), (1, 5)], [(9, 10), (4, 5)]] {
            let a = Weight::from_ratios(&a).unwrap();
            assert_eq!(motive_by_path(&a, &ctx, 1, false).unwrap(), minimal_chamber_motive(2, 1, false).unwrap());
        }
    }

    #[test]
    fn path_report_logs_centre_summands() {
        let ctx = CurveContext::new(2, 3);
        let inside = Weight::from_ratios(&[(49, 100), (48, 100), (47, 100)]).unwrap();
        let r = motive_by_path_report(&inside, &ctx, 1, false).unwrap();
        assert_eq!(r.steps.len(), 1);
        assert!(r.steps[0].removed.is_zero());
        assert_eq!(r.steps[0].added.len(), 1);
        assert!(is_interior_parameter(&r.steps[0].t));
    }

    #[test]
    fn flag_degenerate_examples() {
        let n = MotiveExpr::atom(MotiveAtom::ModuliN { d: 1 });
        assert_eq!(flag_degenerate(&n, 0), n);
        let two = flag_degenerate(&n, 2);
        assert_eq!(two, n.dsum(&n.twist(1).scale(2)).dsum(&n.twist(2)));
        let ctx = CurveContext::new(2, 2);
        let p = poincare(&expand_rational(&two, &ctx), &ctx).unwrap();
        let q = poincare(&expand_rational(&n, &ctx), &ctx).unwrap();
        assert_eq!(p, &q * &Poly::new(vec![1, 0, 1]).pow(2));
    }

    #[test]
    fn hecke_modify_examples() {
        let a = Weight::from_ratios(&[(1, 3)]).unwrap();
        let (d, b) = hecke_modify(4, &a, 1).unwrap();
        assert_eq!((d, b.clone()), (3, Weight::from_ratios(&[(2, 3)]).unwrap()));
        assert_eq!(hecke_modify(d, &b, 1).unwrap(), (2, a.clone()));
        assert!(hecke_modify(4, &a, 2).is_err());
    }

    #[test]
    fn increment_law_on_three_points() {
        let outside = Weight::near_origin(3, 3);
        let inside = Weight::centre(3);
        let w = Wall::new(0, &[1, 2, 3], Parity::Odd).unwrap();
        let diff = &exponents(&outside).unwrap().d_poly() - &exponents(&inside).unwrap().d_poly();
        assert_eq!(diff, increment_law(&w, 3));
    }
}

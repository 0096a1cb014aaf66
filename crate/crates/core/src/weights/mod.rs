//! Rank-2 parabolic weight hypercube: weights, walls, genericity, chamber
//! signatures and straight-line crossing schedules.
//!
//! A weight is `α = (α_1, …, α_N)` with every `α_i ∈ (0, 1)`. For odd
//! degree the wall `W_{s,I}` is the zero set of
//! `(2s+1) + Σ_{i∉I} α_i − Σ_{i∈I} α_i`; for even degree the constant is `2s`.
//! The side where this form is positive is `H^+`.

mod chamber;
mod flip;
mod symmetry;

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use chamber::{classify_chamber, ChamberClass};
pub use flip::{chi_par, flip_type, flip_type_even, flip_type_via_chi, FlipData, ParInvariants};
pub use symmetry::{canonical_wall, hecke_action, perm_action, CanonicalWall, GroupElement};

/// Largest number of marked points supported (walls store `I` as a bitmask).
pub const MAX_POINTS: usize = 63;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    alpha: Vec<BigRational>,
}

impl Weight {
    pub fn new(alpha: Vec<BigRational>) -> Result<Self> {
        if alpha.len() > MAX_POINTS {
            return Err(Error::InvalidWeight(format!("at most {MAX_POINTS} points supported")));
        }
        for (i, a) in alpha.iter().enumerate() {
            if !a.is_positive() || *a >= BigRational::one() {
                return Err(Error::InvalidWeight(format!("alpha_{} = {a} is not in (0,1)", i + 1)));
            }
        }
        Ok(Weight { alpha })
    }

    /// Build from `(numerator, denominator)` pairs.
    pub fn from_ratios(pairs: &[(i64, i64)]) -> Result<Self> {
        let mut alpha = Vec::with_capacity(pairs.len());
        for &(p, q) in pairs {
            if q == 0 {
                return Err(Error::InvalidWeight(format!("{p}/{q} has zero denominator")));
            }
            alpha.push(BigRational::new(p.into(), q.into()));
        }
        Weight::new(alpha)
    }

    /// Same value in every coordinate.
    pub fn constant(n: usize, p: i64, q: i64) -> Result<Self> {
        Weight::from_ratios(&vec![(p, q); n])
    }

    /// Parse `"p/q,p/q,..."`. The empty string is the weight with no points.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Weight::new(Vec::new());
        }
        let alpha = s
            .split(',')
            .map(|part| {
                BigRational::from_str(part.trim())
                    .map_err(|_| Error::InvalidWeight(format!("cannot parse {part:?} as p/q")))
            })
            .collect::<Result<Vec<_>>>()?;
        Weight::new(alpha)
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.alpha
    }

    pub fn sum(&self) -> BigRational {
        self.alpha.iter().fold(BigRational::zero(), |acc, a| acc + a)
    }

    /// `self + t (other - self)`; `t` is not range checked beyond the weight invariant.
    pub fn lerp(&self, other: &Weight, t: &BigRational) -> Result<Weight> {
        check_len(self.len(), other.len())?;
        Weight::new(self.alpha.iter().zip(&other.alpha).map(|(a, b)| a + (b - a) * t).collect())
    }

    /// `α_i = 1/2^{k+i}`; lies in the chamber containing the origin.
    pub fn near_origin(n: usize, k: u32) -> Weight {
        let alpha = (1..=n)
            .map(|i| BigRational::new(BigInt::one(), BigInt::one() << (k as usize + i)))
            .collect();
        Weight { alpha }
    }

    /// Centre of the hypercube, `(1/2, …, 1/2)`.
    pub fn centre(n: usize) -> Weight {
        Weight { alpha: vec![BigRational::new(1.into(), 2.into()); n] }
    }

    pub(crate) fn from_raw(alpha: Vec<BigRational>) -> Weight {
        Weight { alpha }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.alpha.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Weight::parse(s)
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.alpha.iter().map(ToString::to_string))
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<String>::deserialize(d)?;
        Weight::parse(&parts.join(",")).map_err(serde::de::Error::custom)
    }
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::DimensionMismatch { expected, got });
    }
    Ok(())
}

/// Parity of the degree `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of_degree(d: i64) -> Parity {
        if d.rem_euclid(2) == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

/// The wall `W_{s,I}`. Point indices are 1-based; `I` is stored as a bitmask
/// with bit `i-1` for point `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Wall {
    pub s: u32,
    members: u64,
    pub parity: Parity,
}

impl Wall {
    /// Checks only what does not depend on `N`: `|I| > c`, indices in range.
    pub fn new(s: u32, members: &[usize], parity: Parity) -> Result<Wall> {
        let mut mask = 0u64;
        for &i in members {
            if i == 0 || i > MAX_POINTS {
                return Err(Error::InvalidIndex { index: i, max: MAX_POINTS });
            }
            mask |= 1 << (i - 1);
        }
        let w = Wall { s, members: mask, parity };
        if w.size() as i64 <= w.constant() {
            return Err(Error::InvalidWall(format!("{w} violates |I| > {}", w.constant())));
        }
        Ok(w)
    }

    pub(crate) fn from_mask(s: u32, members: u64, parity: Parity) -> Wall {
        Wall { s, members, parity }
    }

    /// `2s+1` (odd) or `2s` (even).
    pub fn constant(&self) -> i64 {
        match self.parity {
            Parity::Odd => 2 * self.s as i64 + 1,
            Parity::Even => 2 * self.s as i64,
        }
    }

    pub fn mask(&self) -> u64 {
        self.members
    }

    pub fn size(&self) -> u32 {
        self.members.count_ones()
    }

    pub fn contains(&self, i: usize) -> bool {
        (1..=MAX_POINTS).contains(&i) && self.members >> (i - 1) & 1 == 1
    }

    /// Members of `I` in increasing order (1-based).
    pub fn members(&self) -> Vec<usize> {
        (1..=MAX_POINTS).filter(|&i| self.contains(i)).collect()
    }

    /// Whether `(s, I)` satisfies the enumeration constraints for `n` points.
    pub fn is_valid_for(&self, n: usize) -> bool {
        let c = self.constant();
        let fits = n >= 64 || self.members >> n == 0;
        fits && c < n as i64 && self.size() as i64 > c
    }

    /// The two walls cut out the same hyperplane (only happens for even
    /// `s = 0` walls with complementary `I`).
    pub fn same_hyperplane(&self, other: &Wall, n: usize) -> bool {
        if self == other {
            return true;
        }
        let full = full_mask(n);
        self.parity == Parity::Even
            && other.parity == Parity::Even
            && self.s == 0
            && other.s == 0
            && self.members ^ other.members == full
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.members().iter().map(ToString::to_string).collect();
        write!(f, "W(s={}, I={{{}}}, {})", self.s, m.join(","), self.parity)
    }
}

#[derive(Serialize, Deserialize)]
struct WallRepr {
    s: u32,
    #[serde(rename = "I")]
    members: Vec<usize>,
    parity: Parity,
}

impl Serialize for Wall {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WallRepr { s: self.s, members: self.members(), parity: self.parity }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Wall {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = WallRepr::deserialize(d)?;
        Wall::new(r.s, &r.members, r.parity).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// All walls for `n` points, ordered by `s` and then by the bitmask of `I`.
pub fn enumerate_walls(n: usize, parity: Parity) -> Vec<Wall> {
    assert!(n <= MAX_POINTS, "at most {MAX_POINTS} points supported");
    let mut out = Vec::new();
    let mut s = 0u32;
    loop {
        let probe = Wall { s, members: 0, parity };
        if probe.constant() >= n as i64 {
            break;
        }
        for mask in 1..=full_mask(n) {
            let w = Wall { s, members: mask, parity };
            if w.size() as i64 > w.constant() {
                out.push(w);
            }
        }
        s += 1;
    }
    out
}

/// `c + Σ_{i∉I} α_i − Σ_{i∈I} α_i`; positive on `H^+`.
pub fn wall_eval(w: &Wall, alpha: &Weight) -> Result<BigRational> {
    if w.members >> alpha.len() != 0 {
        let max = w.members().last().copied().unwrap_or(0);
        return Err(Error::DimensionMismatch { expected: max, got: alpha.len() });
    }
    Ok(form_value(w, &alpha.alpha))
}

/// The wall's affine form at arbitrary coordinates (e.g. cube vertices).
pub(crate) fn form_value(w: &Wall, coords: &[BigRational]) -> BigRational {
    let mut v = BigRational::from_integer(w.constant().into());
    for (i, a) in coords.iter().enumerate() {
        if w.members >> i & 1 == 1 {
            v -= a;
        } else {
            v += a;
        }
    }
    v
}

fn eval_unchecked(w: &Wall, alpha: &Weight) -> BigRational {
    wall_eval(w, alpha).expect("wall enumerated for this dimension")
}

/// `α` over a common denominator `L`, with `L·(Σ_{i∉I} α_i − Σ_{i∈I} α_i)`
/// tabulated for every mask `I`.
pub(crate) struct MaskTable {
    pub denom: i128,
    pub values: Vec<i128>,
}

impl MaskTable {
    /// `None` when `N` or the common denominator is too large.
    pub(crate) fn new(alpha: &Weight) -> Option<MaskTable> {
        let n = alpha.len();
        if n > 24 {
            return None;
        }
        let mut denom: i128 = 1;
        for a in &alpha.alpha {
            denom = denom.lcm(&a.denom().to_i128()?);
            if denom > 1 << 80 {
                return None;
            }
        }
        let nums: Vec<i128> =
            alpha.alpha.iter().map(|a| Some(a.numer().to_i128()? * (denom / a.denom().to_i128()?))).collect::<Option<_>>()?;
        let mut values = vec![0i128; 1 << n];
        values[0] = nums.iter().sum();
        for mask in 1usize..1 << n {
            values[mask] = values[mask & (mask - 1)] - 2 * nums[mask.trailing_zeros() as usize];
        }
        Some(MaskTable { denom, values })
    }

    /// `L · f_w(α)`.
    pub(crate) fn eval(&self, w: &Wall) -> i128 {
        w.constant() as i128 * self.denom + self.values[w.members as usize]
    }
}

/// First wall (in enumeration order) containing `α`, if any.
pub fn wall_through(alpha: &Weight, parity: Parity) -> Option<Wall> {
    let walls = enumerate_walls(alpha.len(), parity).into_iter();
    match MaskTable::new(alpha) {
        Some(t) => walls.into_iter().find(|w| t.eval(w) == 0),
        None => walls.into_iter().find(|w| eval_unchecked(w, alpha).is_zero()),
    }
}

pub fn is_generic(alpha: &Weight, parity: Parity) -> bool {
    wall_through(alpha, parity).is_none()
}

/// `Err(NotGeneric)` naming the first wall through `α`.
pub fn ensure_generic(alpha: &Weight, parity: Parity) -> Result<()> {
    match wall_through(alpha, parity) {
        Some(wall) => Err(Error::NotGeneric { wall }),
        None => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChamberSignature {
    pub signs: Vec<i8>,
}

pub fn chamber_signature(alpha: &Weight, parity: Parity) -> Result<ChamberSignature> {
    let table = MaskTable::new(alpha);
    let mut signs = Vec::new();
    for wall in enumerate_walls(alpha.len(), parity) {
        let sign = match &table {
            Some(t) => t.eval(&wall).signum() as i8,
            None => {
                let v = eval_unchecked(&wall, alpha);
                if v.is_zero() { 0 } else if v.is_positive() { 1 } else { -1 }
            }
        };
        if sign == 0 {
            return Err(Error::NotGeneric { wall });
        }
        signs.push(sign);
    }
    Ok(ChamberSignature { signs })
}

/// Side change when crossing a wall.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "+->-")]
    PlusToMinus,
    #[serde(rename = "-->+")]
    MinusToPlus,
}

impl Direction {
    pub fn reverse(self) -> Direction {
        match self {
            Direction::PlusToMinus => Direction::MinusToPlus,
            Direction::MinusToPlus => Direction::PlusToMinus,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::PlusToMinus => "+->-",
            Direction::MinusToPlus => "-->+",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    #[serde(serialize_with = "ser_rational")]
    pub t: BigRational,
    pub wall: Wall,
    pub direction: Direction,
}

fn ser_rational<S: serde::Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

/// Walls crossed by the segment `from → to`, sorted by the crossing parameter.
///
/// Duplicate descriptions of one hyperplane are reported once. Two distinct
/// hyperplanes crossed at the same `t` give `DegeneratePath`.
pub fn segment_crossings(from: &Weight, to: &Weight, parity: Parity) -> Result<Vec<Crossing>> {
    check_len(from.len(), to.len())?;
    ensure_generic(from, parity)?;
    ensure_generic(to, parity)?;
    let n = from.len();
    let tables = MaskTable::new(from).zip(MaskTable::new(to));
    let mut out: Vec<Crossing> = Vec::new();
    for wall in enumerate_walls(n, parity) {
        if let Some((t0, t1)) = &tables {
            if (t0.eval(&wall) > 0) == (t1.eval(&wall) > 0) {
                continue;
            }
        }
        let f0 = eval_unchecked(&wall, from);
        let f1 = eval_unchecked(&wall, to);
        if f0.is_positive() == f1.is_positive() {
            continue;
        }
        let t = &f0 / (&f0 - &f1);
        let direction = if f0.is_positive() { Direction::PlusToMinus } else { Direction::MinusToPlus };
        if out.iter().any(|c| c.wall.same_hyperplane(&wall, n)) {
            continue;
        }
        out.push(Crossing { t, wall, direction });
    }
    out.sort_by(|a, b| a.t.cmp(&b.t).then(a.wall.cmp(&b.wall)));
    for pair in out.windows(2) {
        if pair[0].t == pair[1].t {
            return Err(Error::DegeneratePath {
                reason: format!("{} and {} are crossed at t = {}", pair[0].wall, pair[1].wall, pair[0].t),
            });
        }
    }
    Ok(out)
}

/// Adds distinct dyadic offsets `c_i / 2^40` chosen from `seed`, retrying
/// until the result is an interior, generic weight.
pub fn perturb(alpha: &Weight, parity: Parity, seed: u64) -> Result<Weight> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale = BigInt::one() << 40usize;
    for _ in 0..256 {
        let mut offsets: Vec<i64> = Vec::with_capacity(alpha.len());
        while offsets.len() < alpha.len() {
            let c = rng.gen_range(-1024i64..=1024);
            if c != 0 && !offsets.contains(&c) {
                offsets.push(c);
            }
        }
        let moved = alpha
            .alpha
            .iter()
            .zip(&offsets)
            .map(|(a, &c)| a + BigRational::new(c.into(), scale.clone()))
            .collect();
        if let Ok(w) = Weight::new(moved) {
            if is_generic(&w, parity) {
                return Ok(w);
            }
        }
    }
    Err(Error::DegeneratePath { reason: format!("could not perturb {alpha} off the walls") })
}

/// Uniform-ish random generic weight with denominators up to 1000.
pub fn sample_generic_weight<R: Rng + ?Sized>(n: usize, parity: Parity, rng: &mut R) -> Weight {
    loop {
        let alpha = (0..n)
            .map(|_| {
                let q: i64 = rng.gen_range(7..=1000);
                let p: i64 = rng.gen_range(1..q);
                BigRational::new(p.into(), q.into())
            })
            .collect();
        let w = Weight::from_raw(alpha);
        if is_generic(&w, parity) {
            return w;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        if k > n {
            0
        } else {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
    }

    fn w(pairs: &[(i64, i64)]) -> Weight {
        Weight::from_ratios(pairs).unwrap()
    }

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn weight_rejects_boundary() {
        assert!(Weight::from_ratios(&[(0, 1)]).is_err());
        assert!(Weight::from_ratios(&[(1, 1)]).is_err());
        assert!(Weight::parse("1/2, 2/3").is_ok());
        assert!(Weight::parse("1/2,x").is_err());
    }

    #[test]
    fn weight_json_uses_lowest_terms() {
        let a = Weight::parse("2/4,1/3").unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"["1/2","1/3"]"#);
        let back: Weight = serde_json::from_str(r#"["1/2","1/3"]"#).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn wall_counts() {
        assert_eq!(enumerate_walls(2, Parity::Odd).len(), 1);
        let n3: Vec<Vec<usize>> = enumerate_walls(3, Parity::Odd).iter().map(Wall::members).collect();
        assert_eq!(n3, vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]]);
        assert!(enumerate_walls(1, Parity::Odd).is_empty());
        assert!(enumerate_walls(0, Parity::Odd).is_empty());
    }

    #[test]
    fn wall_count_formula() {
        for n in 0..=10u64 {
            let mut expected = 0;
            let mut s = 0;
            while 2 * s + 1 < n {
                expected += (2 * s + 2..=n).map(|k| binom(n, k)).sum::<u64>();
                s += 1;
            }
            assert_eq!(enumerate_walls(n as usize, Parity::Odd).len() as u64, expected, "N = {n}");
        }
    }

    #[test]
    fn wall_json() {
        let wall = Wall::new(0, &[1, 2], Parity::Odd).unwrap();
        let s = serde_json::to_string(&wall).unwrap();
        assert_eq!(s, r#"{"s":0,"I":[1,2],"parity":"odd"}"#);
        assert_eq!(serde_json::from_str::<Wall>(&s).unwrap(), wall);
        assert!(serde_json::from_str::<Wall>(r#"{"s":1,"I":[1,2],"parity":"odd"}"#).is_err());
    }

    #[test]
    fn wall_eval_examples() {
        let w12 = Wall::new(0, &[1, 2], Parity::Odd).unwrap();
        assert_eq!(wall_eval(&w12, &w(&[(1, 4), (1, 4)])).unwrap(), q(1, 2));
        assert!(wall_eval(&w12, &w(&[(1, 2), (1, 2)])).unwrap().is_zero());
        let w123 = Wall::new(0, &[1, 2, 3], Parity::Odd).unwrap();
        assert_eq!(wall_eval(&w123, &Weight::centre(3)).unwrap(), q(-1, 2));
    }

    #[test]
    fn genericity() {
        assert!(is_generic(&w(&[(1, 4), (1, 4)]), Parity::Odd));
        assert!(!is_generic(&Weight::centre(2), Parity::Odd));
        assert!(is_generic(&Weight::centre(3), Parity::Odd));
    }

    #[test]
    fn signatures() {
        let sig = |a: &Weight| chamber_signature(a, Parity::Odd).unwrap().signs;
        assert_eq!(sig(&w(&[(1, 4), (1, 4)])), vec![1]);
        assert_eq!(sig(&w(&[(3, 4), (3, 4)])), vec![-1]);
        assert_eq!(sig(&Weight::near_origin(3, 2)), vec![1, 1, 1, 1]);
        assert!(matches!(
            chamber_signature(&Weight::centre(2), Parity::Odd),
            Err(Error::NotGeneric { .. })
        ));
    }

    #[test]
    fn crossings_two_points() {
        let from = w(&[(1, 8), (1, 8)]);
        let to = w(&[(3, 4), (3, 4)]);
        let c = segment_crossings(&from, &to, Parity::Odd).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].direction, Direction::PlusToMinus);
        let hit = from.lerp(&to, &c[0].t).unwrap();
        assert_eq!(hit.sum(), BigRational::one());
        assert!(segment_crossings(&to, &to, Parity::Odd).unwrap().is_empty());
    }

    #[test]
    fn crossings_back_wall() {
        let from = Weight::near_origin(3, 3);
        let to = w(&[(49, 100), (48, 100), (47, 100)]);
        let c = segment_crossings(&from, &to, Parity::Odd).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].wall.members(), vec![1, 2, 3]);
    }

    #[test]
    fn degenerate_segment() {
        // With α_3 = α_4 the walls {1,2,3} and {1,2,4} coincide along the path.
        let from = w(&[(1, 10), (1, 10), (1, 10), (1, 10)]);
        let to = w(&[(9, 10), (9, 10), (1, 10), (1, 10)]);
        assert!(matches!(
            segment_crossings(&from, &to, Parity::Odd),
            Err(Error::DegeneratePath { .. })
        ));
        let p = perturb(&to, Parity::Odd, 7).unwrap();
        assert!(segment_crossings(&from, &p, Parity::Odd).is_ok());
    }

    #[test]
    fn perturb_is_deterministic() {
        let a = Weight::centre(4);
        assert_eq!(perturb(&a, Parity::Odd, 11).unwrap(), perturb(&a, Parity::Odd, 11).unwrap());
        assert!(is_generic(&perturb(&a, Parity::Odd, 11).unwrap(), Parity::Odd));
    }

    #[test]
    fn even_walls_pair_up() {
        let walls = enumerate_walls(2, Parity::Even);
        // s = 0 only: I ∈ {1},{2},{1,2}
        assert_eq!(walls.len(), 3);
        assert!(walls[0].same_hyperplane(&walls[1], 2));
        let from = w(&[(1, 10), (7, 10)]);
        let to = w(&[(7, 10), (1, 10)]);
        let c = segment_crossings(&from, &to, Parity::Even).unwrap();
        assert_eq!(c.len(), 1);
    }
}

//! Flip data attached to a wall, and the parabolic Euler pairing.

use serde::Serialize;

use super::{GroupElement, Parity, Wall};
use crate::error::{Error, Result};
use crate::motive::{MotiveAtom, MotiveExpr};

/// Crossing `W_{s,I}` replaces a `P^{n_minus}`-bundle over the centre on the
/// `H^-` side by a `P^{n_plus}`-bundle on the `H^+` side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlipData {
    pub n_minus: i64,
    pub n_plus: i64,
    pub center: MotiveExpr,
    pub is_flop: bool,
    /// Set when `g < 2`: the fibres may be empty or points.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

impl FlipData {
    fn build(n_minus: i64, n_plus: i64, g: u32, fixed_det: bool) -> FlipData {
        let jac = MotiveExpr::atom(MotiveAtom::JacC);
        let center = if fixed_det { jac } else { jac.tensor(&jac) };
        let warning = (g < 2).then(|| format!("g = {g} < 2: flip data outside its range of validity"));
        FlipData { n_minus, n_plus, center, is_flop: n_minus == n_plus, warning }
    }

    /// Exchange the roles of the two sides.
    pub fn swapped(&self) -> FlipData {
        FlipData { n_minus: self.n_plus, n_plus: self.n_minus, ..self.clone() }
    }
}

/// `n_- = g + |I| − 2s − 3`, `n_+ = g + N − |I| + 2s − 1` for an odd wall.
pub fn flip_type(w: &Wall, g: u32, n: usize, fixed_det: bool) -> Result<FlipData> {
    if w.parity != Parity::Odd {
        return Err(Error::OddParityOnly);
    }
    if !w.is_valid_for(n) {
        return Err(Error::InvalidWall(format!("{w} is not a wall for N = {n}")));
    }
    let (g, s, k, n) = (g as i64, w.s as i64, w.size() as i64, n as i64);
    Ok(FlipData::build(g + k - 2 * s - 3, g + n - k + 2 * s - 1, g as u32, fixed_det))
}

/// Flip data of an even wall, transported from the odd wall obtained by a
/// Hecke modification at the first point. `None` for walls that do not meet
/// the open cube.
pub fn flip_type_even(w: &Wall, g: u32, n: usize, fixed_det: bool) -> Result<Option<FlipData>> {
    if w.parity != Parity::Even {
        return flip_type(w, g, n, fixed_det).map(Some);
    }
    if !w.is_valid_for(n) {
        return Err(Error::InvalidWall(format!("{w} is not a wall for N = {n}")));
    }
    let Some((odd, negated)) = hecke_to_odd(w, n) else {
        return Ok(None);
    };
    let fd = flip_type(&odd, g, n, fixed_det)?;
    Ok(Some(if negated { fd.swapped() } else { fd }))
}

/// Image of an even wall under `α_1 ↦ 1 − α_1` as an odd wall.
pub(crate) fn hecke_to_odd(w: &Wall, n: usize) -> Option<(Wall, bool)> {
    let mut c = w.constant();
    let mut neg = w.mask();
    c += if w.contains(1) { -1 } else { 1 };
    neg ^= 1;
    let negated = c < 0;
    if negated {
        c = -c;
        neg ^= super::full_mask(n);
    }
    let out = Wall::from_mask(((c - 1) / 2) as u32, neg, Parity::Odd);
    out.is_valid_for(n).then_some((out, negated))
}

/// Rank, degree and flag multiplicities `m[i][j]` (point `i`, step `j`) of a
/// parabolic bundle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParInvariants {
    pub rank: i64,
    pub degree: i64,
    pub mult: Vec<Vec<i64>>,
}

impl ParInvariants {
    /// The rank-1 pieces `η'` and `η''` of a rank-2 bundle of degree `d`
    /// destabilised along an odd wall.
    pub fn wall_pair(w: &Wall, n: usize, d: i64) -> Result<(ParInvariants, ParInvariants)> {
        if w.parity != Parity::Odd {
            return Err(Error::OddParityOnly);
        }
        if d.rem_euclid(2) == 0 {
            return Err(Error::EvenDegree(d));
        }
        let d1 = (2 * w.s as i64 + 1 + d) / 2;
        let m1: Vec<Vec<i64>> =
            (1..=n).map(|i| if w.contains(i) { vec![1, 0] } else { vec![0, 1] }).collect();
        let m2 = m1.iter().map(|m| vec![1 - m[0], 1 - m[1]]).collect();
        Ok((
            ParInvariants { rank: 1, degree: d1, mult: m1 },
            ParInvariants { rank: 1, degree: d - d1, mult: m2 },
        ))
    }
}

/// `χ_par(E, F) = −n_F d_E + n_E d_F + n_E n_F (1−g) − Σ_i Σ_{j>k} m_{i,j}(E) m_{i,k}(F)`.
pub fn chi_par(e: &ParInvariants, f: &ParInvariants, g: u32) -> Result<i64> {
    if e.mult.len() != f.mult.len() {
        return Err(Error::DimensionMismatch { expected: e.mult.len(), got: f.mult.len() });
    }
    let mut flags = 0;
    for (me, mf) in e.mult.iter().zip(&f.mult) {
        if me.len() != mf.len() {
            return Err(Error::DimensionMismatch { expected: me.len(), got: mf.len() });
        }
        for (j, e) in me.iter().enumerate() {
            flags += e * mf[..j].iter().sum::<i64>();
        }
    }
    Ok(-f.rank * e.degree + e.rank * f.degree + e.rank * f.rank * (1 - g as i64) - flags)
}

/// `(n_-, n_+) = (−χ_par(η'', η') − 1, −χ_par(η', η'') − 1)`.
pub fn flip_type_via_chi(w: &Wall, g: u32, n: usize, d: i64) -> Result<(i64, i64)> {
    let (e1, e2) = ParInvariants::wall_pair(w, n, d)?;
    Ok((-chi_par(&e2, &e1, g)? - 1, -chi_par(&e1, &e2, g)? - 1))
}

impl GroupElement {
    /// Flip data is preserved by the group, up to exchanging the sides.
    pub fn transport_flip(&self, fd: &FlipData, w: &Wall) -> Result<FlipData> {
        let (_, negated) = self.apply_wall(w)?;
        Ok(if negated { fd.swapped() } else { fd.clone() })
    }
}

//! Hecke and permutation symmetries of the wall arrangement, and reduction
//! of an odd wall to a standard representative `W(l)`.

use num::{BigRational, One};
use serde::Serialize;

use super::{full_mask, Parity, Wall, Weight};
use crate::error::{Error, Result};

/// Hecke flip on an even set of coordinates (`α_i ↦ 1 − α_i`), followed by
/// a permutation. `perm[i-1]` is the image of point `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupElement {
    pub hecke: Vec<usize>,
    pub perm: Vec<usize>,
}

fn mask_of(idx: &[usize]) -> u64 {
    idx.iter().fold(0, |m, &i| m | 1 << (i - 1))
}

fn check_perm(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::InvalidPermutation(format!("expected {n} entries, got {}", perm.len())));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p == 0 || p > n || std::mem::replace(&mut seen[p - 1], true) {
            return Err(Error::InvalidPermutation(format!("{perm:?} is not a permutation of 1..={n}")));
        }
    }
    Ok(())
}

impl GroupElement {
    pub fn identity(n: usize) -> Self {
        GroupElement { hecke: Vec::new(), perm: (1..=n).collect() }
    }

    pub fn new(n: usize, mut hecke: Vec<usize>, perm: Vec<usize>) -> Result<Self> {
        check_perm(&perm, n)?;
        hecke.sort_unstable();
        hecke.dedup();
        if let Some(&bad) = hecke.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::InvalidIndex { index: bad, max: n });
        }
        if hecke.len() % 2 == 1 {
            return Err(Error::InvalidPermutation("Hecke flips come in pairs".into()));
        }
        Ok(GroupElement { hecke, perm })
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// The Hecke part as a product of the adjacent generators `(i, i+1)`.
    pub fn hecke_generators(&self) -> Vec<usize> {
        self.hecke.chunks(2).flat_map(|p| p[0]..p[1]).collect()
    }

    pub fn apply_weight(&self, alpha: &Weight) -> Result<Weight> {
        if alpha.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), got: alpha.len() });
        }
        let mut flipped = alpha.coords().to_vec();
        for &i in &self.hecke {
            flipped[i - 1] = BigRational::one() - &flipped[i - 1];
        }
        let mut out = flipped.clone();
        for (i, a) in flipped.into_iter().enumerate() {
            out[self.perm[i] - 1] = a;
        }
        Ok(Weight::from_raw(out))
    }

    /// Image of a wall. The flag is set when the image form is the negative
    /// of the standard one, i.e. `H^+` and `H^-` are exchanged.
    pub fn apply_wall(&self, w: &Wall) -> Result<(Wall, bool)> {
        let n = self.n();
        if !w.is_valid_for(n) {
            return Err(Error::InvalidWall(format!("{w} is not a wall for N = {n}")));
        }
        // ε_i = +1 off I, -1 on I; flipping coordinate i adds ε_i to c and negates ε_i.
        let mut c = w.constant();
        let mut neg = w.mask();
        let hmask = mask_of(&self.hecke);
        for &i in &self.hecke {
            c += if w.contains(i) { -1 } else { 1 };
        }
        neg ^= hmask;
        let negated = c < 0 || (c == 0 && neg == 0);
        if negated {
            c = -c;
            neg ^= full_mask(n);
        }
        let s = match w.parity {
            Parity::Odd => (c - 1) / 2,
            Parity::Even => c / 2,
        };
        let mut image = 0u64;
        for i in 1..=n {
            if neg >> (i - 1) & 1 == 1 {
                image |= 1 << (self.perm[i - 1] - 1);
            }
        }
        let out = Wall::from_mask(s as u32, image, w.parity);
        if !out.is_valid_for(n) {
            return Err(Error::InvalidWall(format!("{w} maps to a hyperplane missing the open cube")));
        }
        Ok((out, negated))
    }
}

/// Flip coordinates `i` and `i+1` (1-based, `1 ≤ i ≤ N−1`).
pub fn hecke_action(alpha: &Weight, i: usize) -> Result<Weight> {
    let n = alpha.len();
    if i == 0 || i >= n {
        return Err(Error::InvalidIndex { index: i, max: n.saturating_sub(1) });
    }
    GroupElement::new(n, vec![i, i + 1], (1..=n).collect())?.apply_weight(alpha)
}

/// Coordinate `i` moves to position `σ(i)`; `sigma[i-1] = σ(i)`.
pub fn perm_action(alpha: &Weight, sigma: &[usize]) -> Result<Weight> {
    GroupElement::new(alpha.len(), Vec::new(), sigma.to_vec())?.apply_weight(alpha)
}

impl Wall {
    /// `(s, σ(I))`.
    pub fn permute(&self, sigma: &[usize]) -> Result<Wall> {
        let n = sigma.len();
        check_perm(sigma, n)?;
        if self.mask() >> n != 0 {
            return Err(Error::DimensionMismatch { expected: n, got: self.members().last().copied().unwrap_or(0) });
        }
        let image = self.members().iter().fold(0u64, |m, &i| m | 1 << (sigma[i - 1] - 1));
        Ok(Wall::from_mask(self.s, image, self.parity))
    }

    /// The standard odd wall `W(l)`: `1 = −Σ_{i≤l} α_i + Σ_{i>l} α_i`.
    pub fn standard(l: usize, n: usize) -> Result<Wall> {
        let w = Wall::from_mask(0, full_mask(n) & !full_mask(l), Parity::Odd);
        if l > n || !w.is_valid_for(n) {
            return Err(Error::InvalidWall(format!("W({l}) is not a wall for N = {n}")));
        }
        Ok(w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalWall {
    pub l: usize,
    pub witness: GroupElement,
    /// The witness exchanges the two sides.
    pub negated: bool,
}

/// Reduce an odd wall to its standard representative `W(l)`, `0 ≤ l ≤ N/2 − 1`.
pub fn canonical_wall(w: &Wall, n: usize) -> Result<CanonicalWall> {
    if w.parity != Parity::Odd {
        return Err(Error::OddParityOnly);
    }
    if !w.is_valid_for(n) {
        return Err(Error::InvalidWall(format!("{w} is not a wall for N = {n}")));
    }
    let members = w.members();
    let (j, k) = members.split_at(2 * w.s as usize);
    let mut hecke = j.to_vec();
    let kc: Vec<usize> = (1..=n).filter(|i| !k.contains(i)).collect();
    let (front, negated) = if 2 * kc.len() + 2 <= n {
        (kc, false)
    } else {
        hecke.extend_from_slice(&k[..2]);
        (k[2..].to_vec(), true)
    };
    let l = front.len();
    let mut perm = vec![0; n];
    let back = (1..=n).filter(|i| !front.contains(i));
    for (pos, i) in front.iter().copied().chain(back).enumerate() {
        perm[i - 1] = pos + 1;
    }
    let witness = GroupElement::new(n, hecke, perm)?;
    Ok(CanonicalWall { l, witness, negated })
}

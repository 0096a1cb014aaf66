//! Formal ring of motive expressions.
//!
//! A [`MotiveExpr`] is a finite integer combination of terms
//! `c · h(X_1) ⊗ … ⊗ h(X_k)(n)`, where each `X_i` is a [`MotiveAtom`] and
//! `(n)` is a Tate twist. Expressions are always kept in normal form:
//! atoms inside a term are sorted, terms are keyed by `(atoms, twist)`,
//! zero coefficients are dropped, and pure Tate atoms (`Unit`, `Sym^0 C`,
//! projective spaces) are absorbed into twists. Two expressions are equal
//! exactly when their serializations agree.

mod realize;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;

pub use realize::{
    chow_decomposition, dimension, euler, expand_rational, poincare, sym_poincare, ChowDecomposition,
    ChowSymbol,
};

/// Building blocks of motive expressions.
///
/// The derived order (variant tag first, then parameter) is the canonical
/// atom order used in normal forms and in serialized output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum MotiveAtom {
    Unit,
    SymC { n: u32 },
    JacC,
    PicC { a: i64 },
    TildeSymC { n: u32 },
    ProjSpace { m: u32 },
    ModuliN { d: i64 },
    ModuliNL { d: i64 },
}

impl MotiveAtom {
    /// `h(N(2, d))`; `d` must be odd.
    pub fn moduli_n(d: i64) -> Result<Self> {
        if d.rem_euclid(2) == 0 {
            return Err(Error::EvenDegree(d));
        }
        Ok(MotiveAtom::ModuliN { d })
    }

    /// `h(N_L(2, d))`; `d` must be odd.
    pub fn moduli_nl(d: i64) -> Result<Self> {
        if d.rem_euclid(2) == 0 {
            return Err(Error::EvenDegree(d));
        }
        Ok(MotiveAtom::ModuliNL { d })
    }

    pub fn is_moduli(&self) -> bool {
        matches!(self, MotiveAtom::ModuliN { .. } | MotiveAtom::ModuliNL { .. })
    }

    fn validate(&self) -> Result<()> {
        match *self {
            MotiveAtom::ModuliN { d } | MotiveAtom::ModuliNL { d } if d.rem_euclid(2) == 0 => {
                Err(Error::EvenDegree(d))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for MotiveAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MotiveAtom::Unit => write!(f, "Q"),
            MotiveAtom::SymC { n } => write!(f, "h(Sym^{n} C)"),
            MotiveAtom::JacC => write!(f, "h(Jac C)"),
            MotiveAtom::PicC { a } => write!(f, "h(Pic^{a} C)"),
            MotiveAtom::TildeSymC { n } => write!(f, "h(~Sym^{n} C)"),
            MotiveAtom::ProjSpace { m } => write!(f, "h(P^{m})"),
            MotiveAtom::ModuliN { d } => write!(f, "h(N(2,{d}))"),
            MotiveAtom::ModuliNL { d } => write!(f, "h(N_L(2,{d}))"),
        }
    }
}

/// One (possibly unnormalized) summand `coeff · ⊗atoms (twist)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MotiveTerm {
    pub atoms: Vec<MotiveAtom>,
    pub twist: i64,
    pub coeff: i64,
}

impl MotiveTerm {
    pub fn new(atoms: Vec<MotiveAtom>, twist: i64, coeff: i64) -> Self {
        MotiveTerm { atoms, twist, coeff }
    }
}

type TermKey = (Vec<MotiveAtom>, i64);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MotiveExpr {
    terms: BTreeMap<TermKey, i64>,
}

/// Merge equal keys, drop zeros, absorb `Unit`/`Sym^0 C`, and expand
/// projective spaces into Tate twists.
pub fn normalize(raw: impl IntoIterator<Item = MotiveTerm>) -> MotiveExpr {
    let mut out = MotiveExpr::zero();
    for term in raw {
        // Each ProjSpace atom multiplies the term into m+1 twisted copies.
        let mut partial: Vec<(Vec<MotiveAtom>, i64)> = vec![(Vec::new(), term.twist)];
        for atom in term.atoms {
            match atom {
                MotiveAtom::Unit | MotiveAtom::SymC { n: 0 } => {}
                MotiveAtom::ProjSpace { m } => {
                    partial = partial
                        .into_iter()
                        .flat_map(|(atoms, tw)| (0..=m as i64).map(move |k| (atoms.clone(), tw + k)))
                        .collect();
                }
                other => partial.iter_mut().for_each(|(atoms, _)| atoms.push(other)),
            }
        }
        for (mut atoms, twist) in partial {
            atoms.sort();
            out.add_term(atoms, twist, term.coeff);
        }
    }
    out
}

impl MotiveExpr {
    pub fn zero() -> Self {
        MotiveExpr::default()
    }

    /// `Q(twist)`
    pub fn tate(twist: i64) -> Self {
        let mut e = MotiveExpr::zero();
        e.add_term(Vec::new(), twist, 1);
        e
    }

    pub fn unit() -> Self {
        MotiveExpr::tate(0)
    }

    pub fn atom(atom: MotiveAtom) -> Self {
        normalize([MotiveTerm::new(vec![atom], 0, 1)])
    }

    /// `h(P^1)^{⊗n}`
    pub fn p1_power(n: u32) -> Self {
        normalize([MotiveTerm::new(vec![MotiveAtom::ProjSpace { m: 1 }; n as usize], 0, 1)])
    }

    pub fn from_terms(raw: impl IntoIterator<Item = MotiveTerm>) -> Self {
        normalize(raw)
    }

    /// Validating constructor used by deserialization: rejects even-degree moduli atoms.
    pub fn try_from_terms(raw: Vec<MotiveTerm>) -> Result<Self> {
        for t in &raw {
            for a in &t.atoms {
                a.validate()?;
            }
        }
        Ok(normalize(raw))
    }

    fn add_term(&mut self, atoms: Vec<MotiveAtom>, twist: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let key = (atoms, twist);
        let c = self.terms.entry(key.clone()).or_insert(0);
        *c = c.checked_add(coeff).expect("coefficient overflow");
        if *c == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = MotiveTerm> + '_ {
        self.terms
            .iter()
            .map(|((atoms, twist), &coeff)| MotiveTerm::new(atoms.clone(), *twist, coeff))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the term `⊗atoms (twist)`; `atoms` need not be sorted.
    pub fn coeff_of(&self, atoms: &[MotiveAtom], twist: i64) -> i64 {
        let mut key = atoms.to_vec();
        key.sort();
        self.terms.get(&(key, twist)).copied().unwrap_or(0)
    }

    pub fn dsum(&self, other: &MotiveExpr) -> MotiveExpr {
        let mut out = self.clone();
        for ((atoms, twist), &c) in &other.terms {
            out.add_term(atoms.clone(), *twist, c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> MotiveExpr {
        let mut out = MotiveExpr::zero();
        for ((atoms, twist), &c) in &self.terms {
            out.add_term(atoms.clone(), *twist, c.checked_mul(k).expect("coefficient overflow"));
        }
        out
    }

    pub fn tensor(&self, other: &MotiveExpr) -> MotiveExpr {
        let mut out = MotiveExpr::zero();
        for ((a1, t1), &c1) in &self.terms {
            for ((a2, t2), &c2) in &other.terms {
                let mut atoms = Vec::with_capacity(a1.len() + a2.len());
                atoms.extend_from_slice(a1);
                atoms.extend_from_slice(a2);
                atoms.sort();
                out.add_term(atoms, t1 + t2, c1.checked_mul(c2).expect("coefficient overflow"));
            }
        }
        out
    }

    pub fn twist(&self, n: i64) -> MotiveExpr {
        MotiveExpr {
            terms: self
                .terms
                .iter()
                .map(|((atoms, twist), &c)| ((atoms.clone(), twist + n), c))
                .collect(),
        }
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    pub fn contains_moduli(&self) -> bool {
        self.terms.keys().any(|(atoms, _)| atoms.iter().any(MotiveAtom::is_moduli))
    }

    /// Rewrite every `Pic^a C` as `Jac C`.
    pub fn collapse_pic(&self) -> MotiveExpr {
        normalize(self.terms().map(|mut t| {
            for a in t.atoms.iter_mut() {
                if let MotiveAtom::PicC { .. } = a {
                    *a = MotiveAtom::JacC;
                }
            }
            t
        }))
    }

    /// Replace every occurrence of `atom` by `replacement`, distributing over sums.
    pub fn substitute(&self, atom: &MotiveAtom, replacement: &MotiveExpr) -> MotiveExpr {
        let mut out = MotiveExpr::zero();
        for ((atoms, twist), &c) in &self.terms {
            let mut acc = MotiveExpr::tate(*twist).scale(c);
            for a in atoms {
                let factor = if a == atom { replacement.clone() } else { MotiveExpr::atom(*a) };
                acc = acc.tensor(&factor);
            }
            out = out.dsum(&acc);
        }
        out
    }

    /// Distinct atoms appearing anywhere in the expression.
    pub fn atom_set(&self) -> BTreeSet<MotiveAtom> {
        self.terms.keys().flat_map(|(atoms, _)| atoms.iter().copied()).collect()
    }
}

impl fmt::Display for MotiveExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((atoms, twist), &c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊕ ")?;
            }
            match c {
                1 => {}
                -1 => write!(f, "-")?,
                _ => write!(f, "{c}·")?,
            }
            if atoms.is_empty() {
                write!(f, "Q")?;
            } else {
                let parts: Vec<String> = atoms.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join("⊗"))?;
            }
            if *twist != 0 {
                write!(f, "({twist})")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ExprRepr {
    terms: Vec<MotiveTerm>,
}

impl Serialize for MotiveExpr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ExprRepr { terms: self.terms().collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MotiveExpr {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ExprRepr::deserialize(d)?;
        MotiveExpr::try_from_terms(repr.terms).map_err(serde::de::Error::custom)
    }
}

impl Add<&MotiveExpr> for &MotiveExpr {
    type Output = MotiveExpr;
    fn add(self, rhs: &MotiveExpr) -> MotiveExpr {
        self.dsum(rhs)
    }
}

impl Sub<&MotiveExpr> for &MotiveExpr {
    type Output = MotiveExpr;
    fn sub(self, rhs: &MotiveExpr) -> MotiveExpr {
        self.dsum(&rhs.scale(-1))
    }
}

impl Mul<&MotiveExpr> for &MotiveExpr {
    type Output = MotiveExpr;
    fn mul(self, rhs: &MotiveExpr) -> MotiveExpr {
        self.tensor(rhs)
    }
}

impl Neg for &MotiveExpr {
    type Output = MotiveExpr;
    fn neg(self) -> MotiveExpr {
        self.scale(-1)
    }
}

/// Curve parameters shared by the realization functors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CurveContext {
    pub g: u32,
    /// Number of marked points.
    pub n_points: u32,
    /// Identify `Pic^a C` with `Jac C` (valid when `C` has a degree-1 line bundle).
    pub collapse_pic: bool,
    /// Poincaré polynomials of `~Sym^n C`, keyed by `n`.
    pub tilde_sym_betti: Option<BTreeMap<u32, Poly>>,
}

impl CurveContext {
    pub fn new(g: u32, n_points: u32) -> Self {
        CurveContext { g, n_points, ..Default::default() }
    }

    pub fn with_collapse_pic(mut self, on: bool) -> Self {
        self.collapse_pic = on;
        self
    }

    pub fn with_tilde_betti(mut self, table: BTreeMap<u32, Poly>) -> Self {
        self.tilde_sym_betti = Some(table);
        self
    }

    /// [`normalize`], followed by the `Pic → Jac` rewrite when enabled.
    pub fn normalize(&self, raw: impl IntoIterator<Item = MotiveTerm>) -> MotiveExpr {
        let e = normalize(raw);
        if self.collapse_pic {
            e.collapse_pic()
        } else {
            e
        }
    }
}

//! Minimal and maximal chambers (odd degree).

use std::fmt;

use num::{BigRational, One, Signed, Zero};
use serde::Serialize;

use super::{enumerate_walls, ensure_generic, form_value, Parity, Wall, Weight};
use crate::error::Result;

/// A chamber is minimal when its closure contains an even vertex of the
/// cube and maximal when it contains the centre. Both can hold (e.g. `N = 2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ChamberClass {
    pub minimal: bool,
    pub maximal: bool,
}

impl ChamberClass {
    pub fn label(&self) -> &'static str {
        match (self.minimal, self.maximal) {
            (true, true) => "minimal+maximal",
            (true, false) => "minimal",
            (false, true) => "maximal",
            (false, false) => "intermediate",
        }
    }
}

impl fmt::Display for ChamberClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Whether the chamber of `alpha` has `point` in its closure: moving from
/// `point` toward `alpha` by an infinitesimal step lands on the same side of
/// every wall as `alpha`. On a wall through `point` the one-sided sign is
/// the sign of the derivative `f(α) − f(point)`, which equals that of `f(α)`.
fn touches(walls: &[Wall], alpha: &Weight, point: &[BigRational]) -> bool {
    walls.iter().all(|w| {
        let fa = form_value(w, alpha.coords());
        let fp = form_value(w, point);
        let one_sided = if fp.is_zero() { &fa - &fp } else { fp };
        one_sided.is_positive() == fa.is_positive()
    })
}

pub fn classify_chamber(alpha: &Weight) -> Result<ChamberClass> {
    ensure_generic(alpha, Parity::Odd)?;
    let n = alpha.len();
    let walls = enumerate_walls(n, Parity::Odd);
    let centre = vec![BigRational::new(1.into(), 2.into()); n];
    let maximal = touches(&walls, alpha, &centre);
    let minimal = (0u64..1 << n).filter(|v| v.count_ones() % 2 == 0).any(|v| {
        let vertex: Vec<BigRational> = (0..n)
            .map(|i| if v >> i & 1 == 1 { BigRational::one() } else { BigRational::zero() })
            .collect();
        touches(&walls, alpha, &vertex)
    });
    Ok(ChamberClass { minimal, maximal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::hecke_action;

    #[test]
    fn two_points() {
        let a = Weight::from_ratios(&[(1, 10), (1, 10)]).unwrap();
        let c = classify_chamber(&a).unwrap();
        assert!(c.minimal && c.maximal);
    }

    #[test]
    fn three_points() {
        let inside = Weight::from_ratios(&[(49, 100), (48, 100), (47, 100)]).unwrap();
        assert_eq!(classify_chamber(&inside).unwrap().label(), "maximal");
        let outside = Weight::near_origin(3, 3);
        assert_eq!(classify_chamber(&outside).unwrap().label(), "minimal");
        assert!(classify_chamber(&Weight::centre(2)).is_err());
    }

    #[test]
    fn hecke_preserves_class() {
        let a = Weight::from_ratios(&[(9, 10), (8, 10), (1, 10), (3, 100)]).unwrap();
        let c = classify_chamber(&a).unwrap();
        let b = hecke_action(&a, 1).unwrap();
        assert_eq!(classify_chamber(&b).unwrap(), c);
    }
}

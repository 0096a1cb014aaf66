//! Walls of the weight cube for three points, and the chamber of a few weights.

use motivecalc::wallcross::exponents;
use motivecalc::weights::{canonical_wall, classify_chamber, enumerate_walls, flip_type};
use motivecalc::{Parity, Weight};

fn main() -> motivecalc::Result<()> {
    let (g, n) = (3, 3);
    for w in enumerate_walls(n, Parity::Odd) {
        let fd = flip_type(&w, g, n, false)?;
        let c = canonical_wall(&w, n)?;
        println!("{w}: type ({}, {}), standard form W({})", fd.n_minus, fd.n_plus, c.l);
    }

    for text in ["1/10,1/20,1/30", "1/2,1/2,1/2", "9/10,1/20,1/30"] {
        let a: Weight = text.parse()?;
        let class = classify_chamber(&a)?;
        let t = exponents(&a)?;
        println!("α = {a}: {class}, d = {:?}, b = {:?}", t.d, t.b);
    }
    Ok(())
}

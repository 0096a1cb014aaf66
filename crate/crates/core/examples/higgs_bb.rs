//! Fixed loci of the scaling action on parabolic Higgs moduli, for two weights.

use motivecalc::formulas::{bb_fixed_loci_par_higgs, bb_poincare, motive_higgs, motive_par_higgs};
use motivecalc::motive::{expand_rational, poincare};
use motivecalc::{CurveContext, Weight};

fn main() -> motivecalc::Result<()> {
    let ctx = CurveContext::new(2, 0);
    let higgs = motive_higgs(&ctx, 1)?;
    println!("Higgs, g = 2: {higgs}");
    println!("P(t) = {}", poincare(&expand_rational(&higgs, &ctx), &ctx)?);

    let ctx = CurveContext::new(2, 2);
    for text in ["1/10,1/20", "7/10,3/5"] {
        let a = Weight::parse(text)?;
        let comps = bb_fixed_loci_par_higgs(&ctx, 1, &a, false)?;
        println!("α = {a}: {} components", comps.len());
        for c in &comps {
            println!("    codim {:>2}  {}", c.codim, c.base);
        }
        println!("    P(t) = {}", bb_poincare(&comps, &ctx)?);
    }
    let closed = motive_par_higgs(&ctx, 1, false)?;
    println!("closed formula P(t) = {}", poincare(&expand_rational(&closed, &ctx), &ctx)?);
    Ok(())
}

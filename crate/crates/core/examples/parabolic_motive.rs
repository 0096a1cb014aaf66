//! Motive and Poincaré polynomial of a parabolic moduli space.

use motivecalc::motive::{expand_rational, poincare};
use motivecalc::wallcross::closed_formula_parabolic;
use motivecalc::{CurveContext, Weight};

fn main() -> motivecalc::Result<()> {
    let ctx = CurveContext::new(2, 4);
    let alpha = Weight::parse("2/5,3/7,4/9,5/11")?;

    let m = closed_formula_parabolic(&alpha, &ctx, 1, false)?;
    println!("h(M) = {m}");

    let expanded = expand_rational(&m, &ctx);
    println!("expanded: {expanded}");
    println!("P(t) = {}", poincare(&expanded, &ctx)?);

    let fixed = closed_formula_parabolic(&alpha, &ctx, 1, true)?;
    println!("fixed determinant: {fixed}");
    Ok(())
}

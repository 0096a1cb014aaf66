//! Rational Chow groups of N_L in terms of Chow groups of symmetric powers.

use motivecalc::motive::{chow_decomposition, expand_rational};
use motivecalc::{CurveContext, MotiveAtom, MotiveExpr};

fn main() -> motivecalc::Result<()> {
    let g = 4;
    let ctx = CurveContext::new(g, 0);
    let nl = expand_rational(&MotiveExpr::atom(MotiveAtom::ModuliNL { d: 1 }), &ctx);
    for k in 0..=3 * g as i64 - 3 {
        println!("CH^{k}(N_L) = {}", chow_decomposition(&nl, k, &ctx)?);
    }
    Ok(())
}

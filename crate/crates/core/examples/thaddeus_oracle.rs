//! Poincaré polynomial of N_L through the chain of pair flips, against the
//! expansion of the motive.

use motivecalc::formulas::{thaddeus_poincare_nl, thaddeus_states};
use motivecalc::motive::{expand_rational, poincare};
use motivecalc::{CurveContext, MotiveAtom, MotiveExpr};

fn main() -> motivecalc::Result<()> {
    for s in thaddeus_states(3, 1)? {
        println!("δ = {}, step {}: {}", s.delta, s.step, s.poly);
    }
    for g in 2..=5 {
        let ctx = CurveContext::new(g, 0);
        let nl = expand_rational(&MotiveExpr::atom(MotiveAtom::ModuliNL { d: 1 }), &ctx);
        let direct = poincare(&nl, &ctx)?;
        let flips = thaddeus_poincare_nl(g, 0)?;
        println!("g = {g}: {direct} ({})", if direct == flips { "agrees" } else { "DIFFERS" });
    }
    Ok(())
}

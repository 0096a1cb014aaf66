//! Follow a straight path out of the chamber of the origin and log each flip.

use motivecalc::wallcross::{closed_formula_parabolic, motive_by_path_report};
use motivecalc::weights::Direction;
use motivecalc::{CurveContext, Weight};

fn main() -> motivecalc::Result<()> {
    let ctx = CurveContext::new(3, 5);
    let alpha = Weight::parse("1/2,2/5,3/7,4/9,5/11")?;
    let report = motive_by_path_report(&alpha, &ctx, 1, false)?;

    for s in &report.steps {
        let arrow = match s.direction {
            Direction::MinusToPlus => "- to +",
            Direction::PlusToMinus => "+ to -",
        };
        println!("t = {:>12}  {}  {arrow}  type ({}, {})", s.t.to_string(), s.wall, s.n_minus, s.n_plus);
        if !s.added.is_zero() {
            println!("    adds {}", s.added);
        }
        if !s.removed.is_zero() {
            println!("    removes {}", s.removed);
        }
    }
    println!("path:   {}", report.motive);
    println!("closed: {}", closed_formula_parabolic(&alpha, &ctx, 1, false)?);
    Ok(())
}

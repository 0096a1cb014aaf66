//! Symbolic Chow-motive calculator for moduli of rank-2 parabolic and Higgs
//! bundles on a curve of genus `g`.
//!
//! The crate is organised bottom up:
//!
//! * [`motive`]: a free ring of motive expressions with Poincaré, Euler,
//!   dimension and Chow-group realizations.
//! * [`weights`]: the parabolic weight hypercube, its walls, chambers and
//!   symmetries.
//! * [`wallcross`]: motive-level wall-crossing and the closed formula for
//!   parabolic moduli.
//! * [`formulas`]: Higgs and parabolic Higgs formulas, fixed loci of the scaling
//!   action, and the pair-flip recursion for the fixed-determinant space.
//! * [`verify`]: property suites shared by the command line and the tests.
//! * [`cli`]: the `motivecalc` command line.

pub mod cli;
pub mod error;
pub mod formulas;
pub mod motive;
pub mod poly;
pub mod verify;
pub mod wallcross;
pub mod weights;

pub use error::{Error, Result};
pub use motive::{CurveContext, MotiveAtom, MotiveExpr, MotiveTerm};
pub use poly::Poly;
pub use weights::{Parity, Wall, Weight};

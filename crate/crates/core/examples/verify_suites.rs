//! Run every property suite at a small size.

use motivecalc::verify::{run_all, VerifyConfig};

fn main() {
    let cfg = VerifyConfig { trials: 5, seed: 1, ..Default::default() };
    for r in run_all(&cfg) {
        println!("{} {:<20} {:>6} checks  {}", if r.passed { "ok  " } else { "FAIL" }, r.name, r.checks, r.summary);
    }
}

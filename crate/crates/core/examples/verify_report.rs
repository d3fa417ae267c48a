//! Runs the reproduction suite and prints one line per check. Set
//! `PROJRANK_SWEEP_CAP` to shrink the sweeps.

use projrank::verify::{verify, Scope, Status};

fn main() {
    let scope = std::env::args().nth(1).map(|s| s.parse().expect("scope")).unwrap_or(Scope::All);
    let report = verify(scope);
    for c in &report.checks {
        let tag = if c.status == Status::Pass { "PASS" } else { "FAIL" };
        println!("{tag} {:<32} {}", c.check_id, c.anchor);
    }
    println!("{} / {} passed", report.passed, report.total);
    if !report.ok() {
        std::process::exit(1);
    }
}

//! Run the exact identity suite at moderate bounds and print one line per
//! report.
//!
//!   cargo run --example identity_suite

use umemura::identities::{default_known_discrepancies, only_known_failures, run_suite, Status, SuiteBounds};

fn main() {
    let bounds = SuiteBounds::default();
    let suite = run_suite(&bounds, None);
    for r in &suite.reports {
        let status = match r.status {
            Status::Pass => "pass",
            Status::ConditionallyPass => "pass*",
            Status::Fail => "FAIL",
        };
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!(
            "{status:5} {:8} {:24} {}",
            r.id,
            params.join(" "),
            r.convention.as_deref().unwrap_or("")
        );
    }
    println!(
        "\n{} passed, {} conditionally passed (pass*), {} failed",
        suite.passed, suite.conditionally_passed, suite.failed
    );
    println!(
        "failures all match the documented discrepancy list: {}",
        only_known_failures(&suite, &default_known_discrepancies())
    );
}

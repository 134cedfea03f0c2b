//! Scan the quadratic conjecture on the b1 = 0 slice:
//!
//!   U_{m+1} U_{m-1} - (2m+1)^2 U_m^2 = U_{2,m-1}^2 / (4 b2^2) ?
//!
//! The scanner reports, per m, the exact verdict: with U_m read as the
//! two-index member U_{0,m}, the identity holds modulo w^2 - z^2 = 1 with
//! the right-hand side negated — an exact polynomial fact, not a numeric
//! observation.
//!
//!   cargo run --example conjecture_scan

use umemura::identities::check_conjecture51;

fn main() {
    for m in 1..=5u32 {
        let r = check_conjecture51(m);
        println!(
            "m = {m}: {:?}\n   convention: {}\n   printed-form witness: {}",
            r.status,
            r.convention.unwrap_or_default(),
            r.witness_text.unwrap_or_default()
        );
    }
}

//! Reconcile the three normalizations of the one-index ladder: the Toda
//! recurrence values T_n, the explicit subset formula, and the two-index
//! family U_{0,m}. Prints the resolved assignment (index shift, power-of-two
//! scale, variable identification, dimension convention) and the exact
//! bookkeeping of the factor-2 discrepancy in the displayed T_2 value.
//!
//!   cargo run --example resolve_conventions

use umemura::families::resolve_conventions;

fn main() {
    let resolution = resolve_conventions(5);
    println!("{}", serde_json::to_string_pretty(&resolution).unwrap());
}

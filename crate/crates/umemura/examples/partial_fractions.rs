//! Exact partial fractions of the cross-ratio products behind the bilinear
//! recurrence: decompose
//!
//!   prod_{l in I} (x+2+l)/(x+2-l) prod_{l in J} (x-l)/(x+l) + (I <-> J)
//!     = 2 + sum_l b_l / ((x+2-l)(x+l)),
//!
//! check the coefficient-sum closed form 4(|I|-|J|)^2 - 4(|I|+|J|) (with
//! |.| the element sum), and show the one-directional nature of the
//! vanishing criteria.
//!
//!   cargo run --example partial_fractions

use umemura::exactpoly::partial_fractions;

fn show(set_i: &[i64], set_j: &[i64]) {
    let map = partial_fractions(set_i, set_j).unwrap();
    let total: umemura::Rational = map.values().cloned().sum();
    let wi: i64 = set_i.iter().sum();
    let wj: i64 = set_j.iter().sum();
    println!(
        "I = {set_i:?}, J = {set_j:?}: coefficients {:?}",
        map.iter().map(|(l, c)| format!("b_{l} = {c}")).collect::<Vec<_>>()
    );
    println!(
        "   sum = {total}, closed form 4(|I|-|J|)^2 - 4(|I|+|J|) = {}",
        4 * (wi - wj) * (wi - wj) - 4 * (wi + wj)
    );
}

fn main() {
    show(&[2], &[]); // the b_2 = 8 witness
    show(&[2], &[2]); // equal sets: sum = -8 |I|
    show(&[2, 4], &[2]);
    show(&[1, 3], &[1]); // coincident pole at x = -1 handled by the solve

    // The vanishing criteria hold in one direction only: b_1 = 0 for
    // I = {1}, J = {} although 1 - 2 is in no set.
    let map = partial_fractions(&[1], &[]).unwrap();
    println!(
        "\nI = {{1}}, J = {{}}: b_1 = {} although the criterion predicts nonzero",
        map[&1]
    );
}

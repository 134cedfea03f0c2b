//! The exact calculus on the curve w^2 - z^2 = 1: the derivation
//! delta = (w d/dz + z d/dw)/2 realizing d/dx, reduction to the quotient
//! ring, and the second Hirota derivative Dx^2 f.g = f''g - 2f'g' + fg''.
//!
//!   cargo run --example hirota_calculus

use umemura::exactpoly::{delta, hirota2, reduce_mod_relation, Poly4, ZWAB};

fn main() {
    let z = Poly4::var(0);
    let w = Poly4::var(1);

    println!("delta(z) = {}", delta(&z).to_text(&ZWAB));
    println!("delta(w) = {}", delta(&w).to_text(&ZWAB));
    println!("delta^2(z) = {}", delta(&delta(&z)).to_text(&ZWAB));

    let p = w.pow(3);
    println!("w^3 reduces to {}", reduce_mod_relation(&p).to_text(&ZWAB));

    println!("Dx^2 z.w = {}", hirota2(&z, &w).to_text(&ZWAB));
    let f = &z.pow(2) + &w;
    let g = &(&z * &w) + &Poly4::one();
    println!("Dx^2 ({}) . ({}) =", f.to_text(&ZWAB), g.to_text(&ZWAB));
    println!("   {}", hirota2(&f, &g).to_text(&ZWAB));
    println!("   symmetric: {}", hirota2(&f, &g) == hirota2(&g, &f));
}

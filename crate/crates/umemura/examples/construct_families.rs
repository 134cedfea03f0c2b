//! Build generalized Umemura polynomials by every route the crate knows and
//! confirm the routes agree.
//!
//!   cargo run --example construct_families

use umemura::exactpoly::{VBB, ZWAB};
use umemura::families::{
    t_toda, u_explicit, u_gen, u_gen_det, x_factored, DimConvention, RESOLVED_DET_VARIANT,
};

fn main() {
    // Route 1: the defining signed subset sum.
    let u01 = u_gen(0, 1, 0).unwrap();
    println!("U_(0,1)  (subset sum)   = {}", u01.to_text(&ZWAB));

    // Route 2: the determinant, under the resolved entry variant.
    let det = u_gen_det(0, 1, 0, RESOLVED_DET_VARIANT).unwrap();
    println!("U_(0,1)  (determinant)  = {}", det.to_text(&ZWAB));
    assert_eq!(u01, det);

    // Route 3: the Toda recurrence in v (one-index ladder).
    let t3 = t_toda(3).unwrap();
    println!("T_3      (Toda ladder)  = {}", t3.to_text(&VBB));

    // Route 4: the explicit subset formula with GL(n-1) dimensions.
    let e3 = u_explicit(3, DimConvention::GlNMinus1);
    println!("U_3      (explicit)     = {}", e3.to_text(&ZWAB));

    // A k >= 1 member and the double-factorial ladder that connects it to
    // the k = 0 family: U_(0,1) = U_(2,0)^(1) / 3.
    let u201 = u_gen(2, 0, 1).unwrap();
    println!("U_(2,0)^(1)             = {}", u201.to_text(&ZWAB));
    assert_eq!(u201, u01.scale(&umemura::exactpoly::rat(3)));

    // The diagonal a = b factors completely.
    let diag = u_gen(2, 1, 0).unwrap().subst(umemura::exactpoly::B, &umemura::Poly4::var(2));
    let xf = x_factored(2, 1);
    println!(
        "U_(2,1)(z,w;a,a)        = -X_(2,1) with X = {}",
        xf.to_text(&ZWAB)
    );
    assert_eq!(diag, xf.scale(&umemura::exactpoly::rat(-1)));

    println!("\nall four construction routes agree on their overlaps");
}

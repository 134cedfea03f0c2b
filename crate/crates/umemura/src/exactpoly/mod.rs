//! Exact arithmetic kernel: rationals, sparse multivariate polynomials,
//! univariate rational functions, the quotient-ring reduction by
//! w^2 - z^2 = 1, the derivation delta = d/dx, and the second Hirota
//! derivative.
//!
//! The variables z and w are tied to the auxiliary variable x by
//!
//!   z = (1/2)(e^x + e^-x - 2)^(1/2),   w = (1/2)(e^x + e^-x + 2)^(1/2),
//!
//! which forces w^2 - z^2 = 1 and e^x - e^-x = ±4zw. We fix the + branch, so
//! d/dx acts on polynomials in (z, w) as the derivation
//!
//!   delta = (w d/dz + z d/dw) / 2,    delta(z) = w/2,  delta(w) = z/2.
//!
//! The second Hirota derivative Dx^2 f.g = f''g - 2f'g' + fg'' applies delta
//! an even number of times to each factor, so every identity built from it is
//! independent of the branch choice.

pub mod linalg;
pub mod mpoly;
pub mod partial_fractions;
pub mod urat;

pub use linalg::{bareiss_det, solve_exact, SolveOutcome};
pub use mpoly::{grlex, rat, ratio, DivError, Exps, JsonTerm, MPoly, ParseError, Poly3, Poly4, Rational, ToF64Lossy, VBB, ZWAB, ZWB12};
pub use partial_fractions::{cross_ratio_lhs, partial_fractions, PartialFractionError};
pub use urat::{UPoly, URat};



/// Variable indices of the (z, w) pair inside every polynomial family.
pub const Z: usize = 0;
/// Index of w.
pub const W: usize = 1;
/// Index of the parameter a in `Poly4`.
pub const A: usize = 2;
/// Index of the parameter b in `Poly4`.
pub const B: usize = 3;

/// The derivation d/dx expressed in (z, w): (w dp/dz + z dp/dw)/2.
pub fn delta<const N: usize>(p: &MPoly<N>) -> MPoly<N> {
    let half = ratio(1, 2);
    let w = MPoly::<N>::var(W);
    let z = MPoly::<N>::var(Z);
    (&(&w * &p.deriv(Z)) + &(&z * &p.deriv(W))).scale(&half)
}

/// Reduce modulo the relation w^2 - z^2 - 1 by substituting
/// w^2 -> z^2 + 1 until every term has w-degree <= 1. Idempotent.
pub fn reduce_mod_relation<const N: usize>(p: &MPoly<N>) -> MPoly<N> {
    let z2p1 = &MPoly::<N>::var(Z).pow(2) + &MPoly::one();
    // Precompute powers of z^2 + 1 up to the maximum needed.
    let max_half = (p.degree_in(W) / 2) as usize;
    let mut powers = Vec::with_capacity(max_half + 1);
    powers.push(MPoly::<N>::one());
    for _ in 0..max_half {
        let next = powers.last().unwrap() * &z2p1;
        powers.push(next);
    }
    let mut out = MPoly::zero();
    for (e, c) in p.terms() {
        let q = (e[W] / 2) as usize;
        let mut rest = *e;
        rest[W] %= 2;
        out += &MPoly::monomial(c.clone(), rest) * &powers[q];
    }
    out
}

/// True when p == q modulo the relation w^2 - z^2 = 1.
pub fn eq_mod_relation<const N: usize>(p: &MPoly<N>, q: &MPoly<N>) -> bool {
    reduce_mod_relation(&(p - q)).is_zero()
}

/// Second Hirota derivative Dx^2 f.g = f''g - 2 f'g' + f g'' with ' = delta.
pub fn hirota2<const N: usize>(f: &MPoly<N>, g: &MPoly<N>) -> MPoly<N> {
    let df = delta(f);
    let dg = delta(g);
    let ddf = delta(&df);
    let ddg = delta(&dg);
    &(&(&ddf * g) - &(&df * &dg).scale(&rat(2))) + &(f * &ddg)
}

//! Explicit subset formula for the Umemura polynomial ladder:
//!
//!   U_n = sum over I subset of [n-1] of
//!           dim(lambda(I)) * c_I * d_{[n-1]\I} * z^{|I|} * w^{|complement|},
//!
//! where lambda(I) is the partition with Frobenius symbol (I | I - 1), the
//! cumulative parameters are c_k = prod_{j<=k} (c + (2j-1)^2) (likewise d),
//! c_I = prod_{i in I} c_i, and |.| is the element-sum weight. On output the
//! parameters are written a and b.
//!
//! The dimension may be taken in GL(n) or GL(n-1); which convention makes
//! the formula agree with the Toda ladder is decided by the resolver
//! (GL(n-1) wins; see `resolver`).

use crate::combinat::{gl_dim, lambda_of_subset, CombinatError};
use crate::exactpoly::{MPoly, Poly4, Rational, A, B};
use num_traits::Zero;

/// Rank convention for the dimension coefficient of U_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimConvention {
    GlN,
    GlNMinus1,
}

impl DimConvention {
    pub const fn label(self) -> &'static str {
        match self {
            DimConvention::GlN => "GL(n)",
            DimConvention::GlNMinus1 => "GL(n-1)",
        }
    }
}

/// Cumulative odd-square chain c_k = prod_{j=1..k} (c + (2j-1)^2) in the
/// given variable (2 for the a-slot, 3 for the b-slot).
fn odd_square_chain(var: usize, k: i64) -> Poly4 {
    let mut acc = Poly4::one();
    for j in 1..=k {
        acc = &acc * &(&Poly4::var(var) + &Poly4::from_int((2 * j - 1) * (2 * j - 1)));
    }
    acc
}

/// U_n by the explicit formula, n >= 1; the empty index set [0] gives U_1 = 1.
pub fn u_explicit(n: u32, dims: DimConvention) -> Poly4 {
    assert!(n >= 1, "the explicit ladder starts at n = 1");
    let rank = match dims {
        DimConvention::GlN => n,
        DimConvention::GlNMinus1 => n - 1,
    };
    let base: Vec<i64> = (1..=n as i64 - 1).collect();
    let mut acc = Poly4::zero();
    for mask in 0u64..(1 << base.len()) {
        let set: Vec<i64> = base
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        let comp: Vec<i64> = base.iter().copied().filter(|x| !set.contains(x)).collect();
        let lam = lambda_of_subset(&set);
        // A partition with more parts than the rank has representation
        // dimension zero; lambda(I) has max(I) <= n-1 parts, so this only
        // triggers in the GL(n-1) convention at the boundary.
        let dim = match gl_dim(rank, &lam) {
            Ok(d) => Rational::from_integer(d),
            Err(CombinatError::TooManyParts { .. }) => Rational::zero(),
            Err(e) => panic!("unexpected dimension failure: {e}"),
        };
        if dim.is_zero() {
            continue;
        }
        let mut term = MPoly::monomial(
            dim,
            [
                set.iter().sum::<i64>() as u32,
                comp.iter().sum::<i64>() as u32,
                0,
                0,
            ],
        );
        for &i in &set {
            term = &term * &odd_square_chain(A, i);
        }
        for &i in &comp {
            term = &term * &odd_square_chain(B, i);
        }
        acc += term;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;
    use num_traits::One;

    #[test]
    fn u1_is_one() {
        assert_eq!(u_explicit(1, DimConvention::GlNMinus1), Poly4::one());
        assert_eq!(u_explicit(1, DimConvention::GlN), Poly4::one());
    }

    #[test]
    fn u2_terms() {
        // GL(n) convention: (d+1) w + 3 (c+1) z; GL(n-1): (d+1) w + (c+1) z.
        let ugl = u_explicit(2, DimConvention::GlN);
        assert_eq!(ugl.coeff(&[1, 0, 1, 0]), rat(3));
        assert_eq!(ugl.coeff(&[0, 1, 0, 1]), rat(1));
        let u = u_explicit(2, DimConvention::GlNMinus1);
        assert_eq!(u.coeff(&[1, 0, 1, 0]), rat(1));
        assert_eq!(u.coeff(&[1, 0, 0, 0]), rat(1));
        assert_eq!(u.coeff(&[0, 1, 0, 1]), rat(1));
    }

    #[test]
    fn integer_coefficients_up_to_six() {
        for n in 1..=6u32 {
            for dims in [DimConvention::GlN, DimConvention::GlNMinus1] {
                let u = u_explicit(n, dims);
                for (_, c) in u.terms() {
                    assert!(c.denom().is_one(), "U_{n} has non-integer coefficient {c}");
                }
            }
        }
    }
}

//! The Toda-style recurrence for the Umemura polynomials T_n(v), n >= 0:
//!
//!   T_{n-1} T_{n+1} = { (1/4)(-2 B1 - 2 B2 + (B1 - B2) v) + (n - 1/2)^2 } T_n^2
//!                   + (1/4)(v^2 - 4)^2 { T_n T_n'' - (T_n')^2 }
//!                   + (1/4)(v^2 - 4) v T_n T_n',
//!
//! with T_0 = T_1 = 1, primes d/dv, and B1 = b1^2, B2 = b2^2 (only the
//! squares of b1, b2 ever enter). Each step divides exactly by T_{n-1};
//! a nonzero remainder would falsify polynomiality of the ladder and is
//! surfaced as an error rather than truncated.
//!
//! Internally the recurrence is run on the normalization
//! U_n = 2^(n(n-1)) T_n, which clears all powers of 4:
//!
//!   U_{n-1} U_{n+1} = { (B1 - B2) v - 2 B1 - 2 B2 + (2n - 1)^2 } U_n^2
//!                   + (v^2 - 4)^2 { U_n U_n'' - (U_n')^2 }
//!                   + (v^2 - 4) v U_n U_n',
//!
//! whose coefficients stay integral, so the big-rational gcd cost of the
//! raw form never materializes.

use super::FamilyError;
use crate::exactpoly::{rat, ratio, Poly3, Rational};

const V: usize = 0;

/// T_n(v, B1, B2) from the recurrence.
pub fn t_toda(n: u32) -> Result<Poly3, FamilyError> {
    Ok(toda_ladder(n)?.pop().expect("ladder is nonempty"))
}

/// T_0, ..., T_n as a vector (cheaper than repeated calls when scanning).
pub fn toda_ladder(n: u32) -> Result<Vec<Poly3>, FamilyError> {
    Ok(toda_ladder_normalized(n)?
        .into_iter()
        .enumerate()
        .map(|(idx, u)| {
            let e = idx as i64 * (idx as i64 - 1);
            u.scale(&pow2_inv(e))
        })
        .collect())
}

/// U_0, ..., U_n with U_n = 2^(n(n-1)) T_n; all coefficients integral.
pub fn toda_ladder_normalized(n: u32) -> Result<Vec<Poly3>, FamilyError> {
    let v = Poly3::var(V);
    let v2m4 = &v.pow(2) - &Poly3::from_int(4);
    let quartic = v2m4.pow(2);
    let cubic = &v2m4 * &v;
    let b1 = Poly3::var(1);
    let b2 = Poly3::var(2);
    // (B1 - B2) v - 2 B1 - 2 B2, the n-independent bracket part
    let bracket_base = &(&(&b1 - &b2) * &v) - &(&b1 + &b2).scale(&rat(2));

    let mut ladder = vec![Poly3::one(), Poly3::one()];
    for idx in 1..=n.saturating_sub(1) {
        let t = &ladder[idx as usize];
        let t_prev = &ladder[idx as usize - 1];
        let dt = t.deriv(V);
        let shift = rat((2 * idx as i64 - 1) * (2 * idx as i64 - 1));
        let bracket = &bracket_base + &Poly3::constant(shift);
        // With S = T^2: T T' = S'/2 and T T'' - (T')^2 = S''/2 - 2 (T')^2,
        // so the step costs two symmetric squares instead of four products.
        let s = t.pow(2);
        let dsq = dt.pow(2);
        let sp = s.deriv(V);
        let spp = sp.deriv(V);
        let wronskian = &spp.scale(&ratio(1, 2)) - &dsq.scale(&rat(2));
        let rhs = &(&(&bracket * &s) + &(&quartic * &wronskian))
            + &(&cubic * &sp).scale(&ratio(1, 2));
        let next = rhs
            .exact_div(t_prev)
            .map_err(|_| FamilyError::RecurrenceDivisionFailed { index: idx + 1 })?;
        ladder.push(next);
    }
    ladder.truncate(n as usize + 1);
    Ok(ladder)
}

fn pow2_inv(e: i64) -> Rational {
    // 1 / 2^e for e >= 0
    let mut r = Rational::from_integer(1.into());
    let half = ratio(1, 2);
    for _ in 0..e {
        r *= &half;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn initial_conditions() {
        assert_eq!(t_toda(0).unwrap(), Poly3::one());
        assert_eq!(t_toda(1).unwrap(), Poly3::one());
    }

    #[test]
    fn t2_from_one_step() {
        // T_2 = 1/4 - (B1 + B2)/2 + (B1 - B2) v / 4
        let t2 = t_toda(2).unwrap();
        let mut expect = Poly3::zero();
        expect.add_term([0, 0, 0], ratio(1, 4));
        expect.add_term([0, 1, 0], ratio(-1, 2));
        expect.add_term([0, 0, 1], ratio(-1, 2));
        expect.add_term([1, 1, 0], ratio(1, 4));
        expect.add_term([1, 0, 1], ratio(-1, 4));
        assert_eq!(t2, expect);
    }

    #[test]
    fn division_exact_and_degrees() {
        let ladder = toda_ladder(7).unwrap();
        assert_eq!(ladder.len(), 8);
        // Degree in v of T_n is n(n-1)/2.
        for (n, t) in ladder.iter().enumerate() {
            assert_eq!(t.degree_in(0) as usize, n * n.saturating_sub(1) / 2, "degree of T_{n}");
        }
    }

    #[test]
    fn normalized_ladder_is_integral() {
        for u in toda_ladder_normalized(6).unwrap() {
            for (_, c) in u.terms() {
                assert!(c.denom().is_one(), "normalized ladder coefficient {c}");
            }
        }
    }

    #[test]
    fn symmetric_under_v_negation_with_parameter_swap() {
        // T_n(-v; B2, B1) = T_n(v; B1, B2).
        let t4 = t_toda(4).unwrap();
        let swapped = t4.map_vars(&[
            (&Poly3::zero() - &Poly3::var(0)).clone(),
            Poly3::var(2),
            Poly3::var(1),
        ]);
        assert_eq!(swapped, t4);
    }
}

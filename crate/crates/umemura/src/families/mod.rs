//! The generalized Umemura polynomial families, built by four independent
//! routes:
//!
//!   * [`u_gen`] — the defining signed sum over subsets of the ground set;
//!   * [`u_gen_det`](determinant::u_gen_det) — a determinant of the same data;
//!   * [`t_toda`](toda::t_toda) — the Toda-style recurrence in v;
//!   * [`u_explicit`](explicit::u_explicit) — the subset formula with GL
//!     dimension coefficients.
//!
//! The four routes use indexings and normalizations that do not line up on
//! their face; [`resolver`] searches a small declared space of index shifts,
//! powers of two, variable identifications and dimension conventions for the
//! assignment under which they agree, and reports a counterexample otherwise.

pub mod determinant;
pub mod explicit;
pub mod resolver;
pub mod toda;

use crate::combinat::{csign_exponent, dcoef, CombinatError, GroundSet};
use crate::exactpoly::{rat, MPoly, Poly4, Rational, A, B, W, Z};
use num_traits::One;

pub use determinant::{u_gen_det, CFactor, DetVariant, RESOLVED_DET_VARIANT};
pub use explicit::{u_explicit, DimConvention};
pub use resolver::{resolve_conventions, ConventionResolution, ResolutionStatus, VariableMap};
pub use toda::t_toda;

#[derive(Debug, Clone, thiserror::Error)]
pub enum FamilyError {
    /// k out of range: the family U^(k) with [k] not inside the ground set.
    #[error("invalid k = {k} for ground set [{n};{m}] (need k <= n)")]
    InvalidK { n: u32, m: u32, k: u32 },
    /// The Toda recurrence step left a nonzero remainder, falsifying
    /// polynomiality at that index.
    #[error("Toda recurrence division failed at index {index}")]
    RecurrenceDivisionFailed { index: u32 },
    #[error(transparent)]
    Combinat(#[from] CombinatError),
}

/// Which parameter symbol a product chain is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamVar {
    A,
    B,
}

impl ParamVar {
    fn index(self) -> usize {
        match self {
            ParamVar::A => A,
            ParamVar::B => B,
        }
    }
}

/// The shifted parameter abar_k = a + (k-1)^2 (same shape for b).
pub fn shifted_param(sym: ParamVar, k: i64) -> Poly4 {
    &Poly4::var(sym.index()) + &Poly4::from_int((k - 1) * (k - 1))
}

/// Cumulative parity-chain products:
///   a_{2k}   = abar_2 abar_4 ... abar_{2k},
///   a_{2k+1} = abar_1 abar_3 ... abar_{2k+1},
/// so a_1 = a and a_2 = a + 1. The chains never mix parities.
pub fn cumulative_param(sym: ParamVar, i: i64) -> Poly4 {
    assert!(i >= 0, "cumulative parameter index must be nonnegative");
    let mut acc = Poly4::one();
    let mut k = if i % 2 == 0 { 2 } else { 1 };
    while k <= i {
        acc = &acc * &shifted_param(sym, k);
        k += 2;
    }
    acc
}

/// a_I = prod_{i in I} a_i over a set of ground elements.
pub fn param_product_over(sym: ParamVar, set: &[i64]) -> Poly4 {
    let mut acc = Poly4::one();
    for &i in set {
        acc = &acc * &cumulative_param(sym, i);
    }
    acc
}

/// Sign convention for the prefactor prod over i in I\[k], j in [k] of the
/// subset sum. The denominators print as (i - j); since every i there
/// exceeds every j in [k], that reading makes the prefactor positive. The
/// (j - i) reading flips the sign once per pair. Only the (j - i) reading
/// makes the k >= 1 members satisfy both the bilinear recurrence (checked
/// exactly for n >= 1, where the unwanted term carries U^(1) squared) and
/// the double-factorial ratio ladder
/// U_{k,m}^{(k)} (2k+2m+1)!! = U_{k+2,m-1}^{(k+1)} (2k+1)!! (2m-1)!!,
/// which fails in every instance with the printed reading.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prefactor {
    IMinusJ,
    JMinusI,
}

/// The pinned prefactor convention (empirical; see the identities suite).
pub const RESOLVED_PREFACTOR: Prefactor = Prefactor::JMinusI;

/// U_{n,m}^{(k)}(z, w; a, b): the signed subset sum
///
///   sum over [k] <= I <= [n;m] of
///     prod_{i in I\[k], j in [k]} (i+j)/(i-j)
///     * d_{n,m}(I) * (-1)^{c(I)}
///     * a_{I\[k]} b_{[n;m]\I} z^{|I\[k]|} w^{|[n;m]\I|},
///
/// with |.| the element-sum weight. Errors with `InvalidK` when k > n
/// (equivalently, when [k] is not a subset of [n;m]).
pub fn u_gen(n: u32, m: u32, k: u32) -> Result<Poly4, FamilyError> {
    if k > n {
        return Err(FamilyError::InvalidK { n, m, k });
    }
    Ok(u_gen_sum(n, m, k, RESOLVED_PREFACTOR))
}

/// The literal subset sum, total in k: when [k] is not contained in the
/// ground set no subset passes the filter and the value is 0. This is the
/// reading under which U_{0,m}^{(1)} = 0, which the recurrence checks need.
pub fn u_gen_or_zero(n: u32, m: u32, k: u32) -> Poly4 {
    u_gen_sum(n, m, k, RESOLVED_PREFACTOR)
}

/// Subset sum with an explicit prefactor convention (resolver plumbing).
pub fn u_gen_sum(n: u32, m: u32, k: u32, pref: Prefactor) -> Poly4 {
    let ground = GroundSet::new(n, m);
    let kset: Vec<i64> = (1..=k as i64).collect();
    let mut acc = Poly4::zero();
    for subset in ground.subsets() {
        if !kset.iter().all(|x| subset.contains(*x)) {
            continue;
        }
        let extra: Vec<i64> = subset
            .members()
            .iter()
            .copied()
            .filter(|x| !kset.contains(x))
            .collect();
        let comp = subset.complement();

        let mut coeff = Rational::one();
        for &i in &extra {
            for &j in &kset {
                let den = match pref {
                    Prefactor::IMinusJ => i - j,
                    Prefactor::JMinusI => j - i,
                };
                coeff *= rat(i + j) / rat(den);
            }
        }
        coeff *= Rational::from_integer(
            dcoef(&subset).expect("d coefficients are integers on every tested ground set"),
        );
        if csign_exponent(&subset) % 2 == 1 {
            coeff = -coeff;
        }

        let monomial = MPoly::monomial(
            coeff,
            [weight_u32(&extra), weight_u32(comp.members()), 0, 0],
        );
        let term = &(&param_product_over(ParamVar::A, &extra)
            * &param_product_over(ParamVar::B, comp.members()))
            * &monomial;
        acc += term;
    }
    acc
}

fn weight_u32(set: &[i64]) -> u32 {
    set.iter().sum::<i64>() as u32
}

/// Binomial coefficient C(n, 2).
pub fn choose2(n: u32) -> u32 {
    n * n.saturating_sub(1) / 2
}

/// The closed-form family X_{n,m}(z, w; a) =
/// a_{[n;m]} (z+w)^C(n+m+1,2) (z-w)^C(m+1,2), which matches the k = 0
/// family on the diagonal a = b up to a sign fixed by the resolver.
pub fn x_factored(n: u32, m: u32) -> Poly4 {
    let ground = GroundSet::new(n, m);
    let zw_sum = &Poly4::var(Z) + &Poly4::var(W);
    let zw_diff = &Poly4::var(Z) - &Poly4::var(W);
    let mut acc = param_product_over(ParamVar::A, ground.elements());
    acc = &acc * &zw_sum.pow(choose2(n + m + 1));
    acc = &acc * &zw_diff.pow(choose2(m + 1));
    acc
}

/// Sign relating `u_gen(n, m, 0)` at b = a to [`x_factored`]:
/// (-1)^C(m+1,2). Fixed empirically by the resolver and pinned here.
pub fn factored_sign(m: u32) -> i64 {
    if choose2(m + 1) % 2 == 1 {
        -1
    } else {
        1
    }
}

/// The m = -1 boundary value of the two-index family, needed by the
/// bilinear recurrence at m = 0: U_{n,-1} = U_{n-1,0}. The naive seed 1 is
/// correct only for n <= 1; for n >= 2 the recurrence itself forces this
/// value (solve the m = 0 instance for the unknown factor in the quotient
/// ring by w^2 - z^2 = 1 and the unique polynomial answer is U_{n-1,0}).
pub fn recurrence_seed(n: u32) -> Poly4 {
    if n == 0 {
        Poly4::one()
    } else {
        u_gen(n - 1, 0, 0).expect("k = 0 is always valid")
    }
}

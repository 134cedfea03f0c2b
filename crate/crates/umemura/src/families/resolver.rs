//! Reconciliation of the three normalizations of the Umemura ladder.
//!
//! Three independent constructions should agree:
//!
//!   * the Toda recurrence values T_n(v, B1, B2);
//!   * the explicit subset formula U_n (parameters a = -4 B1, b = -4 B2,
//!     variables z = (2-v)/4, w = (2+v)/4, dimension in GL(n) or GL(n-1));
//!   * the two-index family U_{0,m}(z, w; a, b), even in both variables and
//!     tied to v through the quotient relation w^2 - z^2 = 1.
//!
//! They come with incompatible indexings and scales, so the resolver searches
//! a small declared space: index shift s in {-1, 0, +1}; a power-of-two law
//! 2^(alpha n(n-1) + beta n) with alpha in {0, +-1}, beta in {0, +-1, +-2};
//! the variable identifications below; and the dimension convention. The
//! result is deterministic: either the full assignment under which all
//! comparisons hold up to the bound, or the deepest-reaching counterexample.
//!
//! The identification z^2 = (2-v)/4, w^2 = (2+v)/4 is incompatible with the
//! ring relation w^2 - z^2 = 1 as a simultaneous substitution (it would force
//! v = 2), so each of its one-sided readings is searched: eliminate one
//! variable through the relation first, then substitute the other. The two
//! branches differ by v -> -v, i.e. by the B1 <-> B2 swap. The identification
//! z^2 = (v^2-4)/4, w^2 = v^2/4 respects the relation and needs no branch.

use super::explicit::{u_explicit, DimConvention};
use super::toda::toda_ladder;
use super::{u_gen, DetVariant};
use crate::exactpoly::{rat, ratio, MPoly, Poly3, Poly4, Rational, A, B, W, Z};

use serde::Serialize;

/// Candidate identification between the (z, w) pair and the Toda variable v.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VariableMap {
    /// Eliminate w through w^2 = z^2 + 1, then z^2 -> (2-v)/4.
    HalfShiftZBranch,
    /// Eliminate z through z^2 = w^2 - 1, then w^2 -> (2+v)/4.
    HalfShiftWBranch,
    /// z^2 -> (v^2-4)/4 and w^2 -> v^2/4 simultaneously.
    VSquared,
}

impl VariableMap {
    pub const fn label(self) -> &'static str {
        match self {
            VariableMap::HalfShiftZBranch => "z^2 = (2-v)/4 (w eliminated by the relation)",
            VariableMap::HalfShiftWBranch => "w^2 = (2+v)/4 (z eliminated by the relation)",
            VariableMap::VSquared => "z^2 = (v^2-4)/4, w^2 = v^2/4",
        }
    }

    pub fn all() -> [VariableMap; 3] {
        [
            VariableMap::HalfShiftZBranch,
            VariableMap::HalfShiftWBranch,
            VariableMap::VSquared,
        ]
    }
}

/// A full convention assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Assignment {
    /// U_{0,m} corresponds to Toda index m + shift.
    pub shift: i32,
    /// Scale law exponent: U_n = 2^(alpha n(n-1) + beta n) T_n.
    pub alpha: i32,
    pub beta: i32,
    pub map: VariableMap,
    pub dims_gl_n_minus_1: bool,
}

#[derive(Debug, Clone, Serialize)]
pub enum ResolutionStatus {
    Resolved,
    Unresolved { counterexample: String },
}

/// Deterministic report of the convention search.
#[derive(Debug, Clone, Serialize)]
pub struct ConventionResolution {
    pub schema: u32,
    pub status: ResolutionStatus,
    pub assignment: Option<Assignment>,
    /// Number of assignments in the declared space that satisfy every
    /// comparison (the winner is the first in scan order).
    pub matches: usize,
    pub checked_up_to: u32,
    /// Exact bookkeeping of the scale discrepancy in the printed T_2 value.
    pub t2_notes: Vec<String>,
    /// Label of the determinant entry variant that reproduces the subset sum
    /// (None when no variant matches on the scanned grid).
    pub det_variant: Option<String>,
}

fn scale_of(alpha: i32, beta: i32, n: i32) -> Rational {
    let e = alpha * n * (n - 1) + beta * n;
    if e >= 0 {
        rat(1i64 << e.min(62))
    } else {
        ratio(1, 1i64 << (-e).min(62))
    }
}

/// Substitute z^2 or w^2 images into a polynomial that is even in both z and
/// w; returns None if an odd exponent appears.
fn map_even<const M: usize>(
    p: &Poly4,
    z_sq: &MPoly<M>,
    w_sq: &MPoly<M>,
    a_img: &MPoly<M>,
    b_img: &MPoly<M>,
) -> Option<MPoly<M>> {
    let mut out = MPoly::<M>::zero();
    for (e, c) in p.terms() {
        if e[Z] % 2 != 0 || e[W] % 2 != 0 {
            return None;
        }
        let mut term = MPoly::<M>::constant(c.clone());
        term = &term * &z_sq.pow(e[Z] / 2);
        term = &term * &w_sq.pow(e[W] / 2);
        term = &term * &a_img.pow(e[A]);
        term = &term * &b_img.pow(e[B]);
        out += term;
    }
    Some(out)
}

/// Eliminate z by z^2 -> w^2 - 1 (mirror of the standard reduction).
fn eliminate_z(p: &Poly4) -> Poly4 {
    let w2m1 = &Poly4::var(W).pow(2) - &Poly4::one();
    let mut out = Poly4::zero();
    for (e, c) in p.terms() {
        let q = e[Z] / 2;
        let mut rest = *e;
        rest[Z] %= 2;
        out += &MPoly::monomial(c.clone(), rest) * &w2m1.pow(q);
    }
    out
}

fn eliminate_w(p: &Poly4) -> Poly4 {
    crate::exactpoly::reduce_mod_relation(p)
}

/// Map U_{0,m} into the Toda variables (v, B1, B2) under a candidate
/// identification; a -> -4 B1, b -> -4 B2 throughout.
pub fn u_gen_in_toda_vars(u: &Poly4, map: VariableMap) -> Option<Poly3> {
    let v = Poly3::var(0);
    let a_img = Poly3::var(1).scale(&rat(-4));
    let b_img = Poly3::var(2).scale(&rat(-4));
    match map {
        VariableMap::HalfShiftZBranch => {
            let reduced = eliminate_w(u);
            let z_sq = (&Poly3::from_int(2) - &v).scale(&ratio(1, 4));
            map_even(&reduced, &z_sq, &Poly3::one(), &a_img, &b_img)
        }
        VariableMap::HalfShiftWBranch => {
            let reduced = eliminate_z(u);
            let w_sq = (&Poly3::from_int(2) + &v).scale(&ratio(1, 4));
            map_even(&reduced, &Poly3::one(), &w_sq, &a_img, &b_img)
        }
        VariableMap::VSquared => {
            let z_sq = (&v.pow(2) - &Poly3::from_int(4)).scale(&ratio(1, 4));
            let w_sq = v.pow(2).scale(&ratio(1, 4));
            map_even(u, &z_sq, &w_sq, &a_img, &b_img)
        }
    }
}

/// The explicit-formula ladder value in Toda variables: z -> (2-v)/4,
/// w -> (2+v)/4, a -> -4 B1, b -> -4 B2 (plain substitution; these variables
/// appear to the first power).
pub fn explicit_in_toda_vars(n: u32, dims: DimConvention) -> Poly3 {
    let v = Poly3::var(0);
    let images = [
        (&Poly3::from_int(2) - &v).scale(&ratio(1, 4)),
        (&Poly3::from_int(2) + &v).scale(&ratio(1, 4)),
        Poly3::var(1).scale(&rat(-4)),
        Poly3::var(2).scale(&rat(-4)),
    ];
    u_explicit(n, dims).map_vars(&images)
}

/// Search the declared convention space. `max_index` bounds every compared
/// index (Toda index and two-index family m alike).
pub fn resolve_conventions(max_index: u32) -> ConventionResolution {
    let ladder = toda_ladder(max_index + 1).expect("Toda ladder is polynomial in range");
    let ugen: Vec<Poly4> = (0..=max_index).map(|m| u_gen(0, m, 0).unwrap()).collect();

    let mut matches: Vec<Assignment> = Vec::new();
    // Track the deepest-reaching failure for the counterexample report.
    let mut best_fail: Option<(u32, String)> = None;

    for shift in [-1i32, 0, 1] {
        for alpha in [0i32, 1, -1] {
            for beta in [0i32, 1, -1, 2, -2] {
                for map in VariableMap::all() {
                    for dims in [DimConvention::GlNMinus1, DimConvention::GlN] {
                        let asg = Assignment {
                            shift,
                            alpha,
                            beta,
                            map,
                            dims_gl_n_minus_1: dims == DimConvention::GlNMinus1,
                        };
                        match check_assignment(&asg, dims, max_index, &ladder, &ugen) {
                            Ok(()) => matches.push(asg),
                            Err((depth, why)) => {
                                if best_fail.as_ref().map_or(true, |(d, _)| depth > *d) {
                                    best_fail = Some((depth, why));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    let t2_notes = t2_discrepancy_notes(&ladder[2]);
    let det_variant = resolve_det_variant(6).map(DetVariant::label);

    match matches.first().copied() {
        Some(assignment) => ConventionResolution {
            schema: 1,
            status: ResolutionStatus::Resolved,
            assignment: Some(assignment),
            matches: matches.len(),
            checked_up_to: max_index,
            t2_notes,
            det_variant,
        },
        None => ConventionResolution {
            schema: 1,
            status: ResolutionStatus::Unresolved {
                counterexample: best_fail
                    .map(|(_, why)| why)
                    .unwrap_or_else(|| "no comparisons were possible".into()),
            },
            assignment: None,
            matches: 0,
            checked_up_to: max_index,
            t2_notes,
            det_variant,
        },
    }
}

fn check_assignment(
    asg: &Assignment,
    dims: DimConvention,
    max_index: u32,
    ladder: &[Poly3],
    ugen: &[Poly4],
) -> Result<(), (u32, String)> {
    // Leg 1: explicit formula vs Toda ladder at equal index.
    for n in 1..=max_index {
        let lhs = explicit_in_toda_vars(n, dims);
        let rhs = ladder[n as usize].scale(&scale_of(asg.alpha, asg.beta, n as i32));
        if lhs != rhs {
            return Err((
                n,
                format!(
                    "explicit ladder vs Toda at n = {n} under {:?}: {} != {}",
                    asg,
                    lhs.to_text(&crate::exactpoly::VBB),
                    rhs.to_text(&crate::exactpoly::VBB)
                ),
            ));
        }
    }
    // Leg 2: two-index family vs Toda ladder at index m + shift.
    for m in 0..=max_index.saturating_sub(asg.shift.max(0) as u32) {
        let target = m as i32 + asg.shift;
        if target < 0 || target as u32 > max_index + 1 {
            return Err((m, format!("no Toda index {target} for m = {m} under {asg:?}")));
        }
        let Some(mapped) = u_gen_in_toda_vars(&ugen[m as usize], asg.map) else {
            return Err((m, format!("odd exponents obstruct {:?} at m = {m}", asg.map)));
        };
        let rhs = ladder[target as usize].scale(&scale_of(asg.alpha, asg.beta, target));
        if mapped != rhs {
            return Err((
                m,
                format!(
                    "two-index family vs Toda at m = {m} under {:?}: {} != {}",
                    asg,
                    mapped.to_text(&crate::exactpoly::VBB),
                    rhs.to_text(&crate::exactpoly::VBB)
                ),
            ));
        }
    }
    Ok(())
}

/// Exact record of the factor-two discrepancy in the printed T_2 value.
fn t2_discrepancy_notes(t2: &Poly3) -> Vec<String> {
    use crate::exactpoly::VBB;
    let v = Poly3::var(0);
    let one_minus = |var: usize| -> Poly3 {
        &Poly3::one() - &Poly3::var(var).scale(&rat(4))
    };
    // Reading with the leading 1/2 as printed.
    let half_reading = (&(&one_minus(1) * &(&Poly3::from_int(2) - &v))
        + &(&one_minus(2) * &(&Poly3::from_int(2) + &v)))
        .scale(&ratio(1, 8));
    // Reading without the leading 1/2.
    let bare_reading = half_reading.scale(&rat(2));
    let mut notes = Vec::new();
    notes.push(format!(
        "recurrence T_2 = {}",
        t2.to_text(&VBB)
    ));
    if half_reading == t2.scale(&rat(2)) {
        notes.push(format!(
            "displayed T_2 (with its leading 1/2) = {} = 2 * recurrence T_2; \
             the factor 2 is not of the form 2^(alpha*n(n-1) + beta*n) at n = 2 \
             given T_0 = T_1 = 1 force alpha*0 + beta*0 = 0 and beta = 0",
            half_reading.to_text(&VBB)
        ));
    }
    if bare_reading == t2.scale(&rat(4)) {
        notes.push(format!(
            "displayed T_2 without the leading 1/2 = {} = 4 * recurrence T_2 = U_2 \
             under the resolved scale 2^(n(n-1))",
            bare_reading.to_text(&VBB)
        ));
    }
    notes
}

/// Find the determinant entry variant that reproduces the subset sum on all
/// (n, m, k) with n + 2m <= `max_n2m`, k <= n.
pub fn resolve_det_variant(max_n2m: u32) -> Option<DetVariant> {
    DetVariant::all().into_iter().find(|&variant| {
        for n in 0..=max_n2m {
            for m in 0..=(max_n2m - n) / 2 {
                for k in 0..=n {
                    let det = super::u_gen_det(n, m, k, variant).unwrap();
                    let sum = u_gen(n, m, k).unwrap();
                    if det != sum {
                        return false;
                    }
                }
            }
        }
        true
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_bound_resolves() {
        // With indices <= 1 every candidate agrees (T_0 = T_1 = 1).
        let res = resolve_conventions(1);
        assert!(matches!(res.status, ResolutionStatus::Resolved));
        assert!(res.matches >= 1);
    }

    #[test]
    fn resolution_is_deterministic() {
        let a = resolve_conventions(3);
        let b = resolve_conventions(3);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn two_variable_shift_identity() {
        // The raw two-variable form of the resolved shift: substituting
        // (-z^2, w^2) for the explicit formula's variables reproduces the
        // two-index member exactly, with no quotient reduction.
        use crate::exactpoly::{Poly4, A, B};
        for m in 0..=4u32 {
            let images = [
                (&Poly4::zero() - &Poly4::var(0).pow(2)).clone(),
                Poly4::var(1).pow(2),
                Poly4::var(A),
                Poly4::var(B),
            ];
            let mapped = u_explicit(m + 1, DimConvention::GlNMinus1).map_vars(&images);
            assert_eq!(mapped, u_gen(0, m, 0).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn t2_notes_document_factor_two() {
        let res = resolve_conventions(2);
        assert!(res.t2_notes.iter().any(|n| n.contains("2 * recurrence T_2")));
        assert!(res.t2_notes.iter().any(|n| n.contains("4 * recurrence T_2")));
    }
}

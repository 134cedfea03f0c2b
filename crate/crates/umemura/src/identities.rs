//! Executable verification of the identity web connecting the polynomial
//! families: the bilinear recurrence through the second Hirota derivative,
//! the recurrence in the first parameter, the cross-ratio partial-fraction
//! lemmas, the diagonal factorization, the parameter-specialization
//! identities, the double-factorial ratio ladder, and the Plücker-type
//! conjecture for the b1 = 0 slice.
//!
//! Every check is a pure function from indices to an [`IdentityReport`].
//! Failures are first-class outcomes: the harness certifies or refutes each
//! printed identity, and a fail report with a witness is a persisted result,
//! never an error. Each polynomial identity is attempted both raw and
//! modulo the relation w^2 - z^2 = 1, and the report records which reading
//! holds.

use crate::combinat::GroundSet;
use crate::exactpoly::{
    hirota2, partial_fractions, rat, ratio, reduce_mod_relation, Poly4, Rational, A, B, W, Z,
};
use crate::families::{
    factored_sign, param_product_over, recurrence_seed, shifted_param, u_gen, u_gen_or_zero,
    x_factored, ParamVar,
};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::time::Instant;

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Holds under a recorded convention (index shift, sign, quotient
    /// reduction) rather than under the most literal reading.
    ConditionallyPass,
}

/// Structured result of one identity check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    /// The convention under which the identity holds (or the closest one
    /// attempted), e.g. "modulo w^2-z^2-1" or "shift=0, sign=-1".
    pub convention: Option<String>,
    /// Minimal counterexample description on failure.
    pub witness_text: Option<String>,
    /// Human-readable statement of what was checked.
    pub paper_anchor: String,
    pub wall_time_ms: u128,
}

impl IdentityReport {
    fn new(id: &str, anchor: &str) -> Self {
        IdentityReport {
            id: id.to_string(),
            params: BTreeMap::new(),
            status: Status::Fail,
            convention: None,
            witness_text: None,
            paper_anchor: anchor.to_string(),
            wall_time_ms: 0,
        }
    }

    fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Pass | Status::ConditionallyPass)
    }
}

fn truncate_poly(p: &Poly4) -> String {
    let s = p.to_text(&crate::exactpoly::ZWAB);
    if s.len() > 400 {
        format!("{}... ({} terms)", &s[..400], p.num_terms())
    } else {
        s
    }
}

/// U_{n,m} with the m = -1 boundary value U_{n-1,0}.
fn family(n: u32, m: i32) -> Poly4 {
    if m < 0 {
        recurrence_seed(n)
    } else {
        u_gen(n, m as u32, 0).expect("k = 0 is always valid")
    }
}

/// The bilinear recurrence
///
///   U_{n,m-1} U_{n,m+1} = (-abar_{n+2m+2} z^2 + bbar_{n+2m+2} w^2) U_{n,m}^2
///                       + 8 z^2 w^2 Dx^2 U_{n,m}.U_{n,m}
///                       - (4/(n+2m+1)^2) a b (a-b) z^2 w^2 (U_{n,m}^{(1)})^2,
///
/// checked raw and modulo w^2 - z^2 = 1 (it holds only modulo the relation
/// away from (0,0)); the m = -1 factor is U_{n-1,0}.
pub fn check_thm41(n: u32, m: u32) -> IdentityReport {
    let t0 = Instant::now();
    let mut report = IdentityReport::new(
        "thm41",
        "U(n,m-1) U(n,m+1) = (-abar z^2 + bbar w^2) U^2 + 8 z^2 w^2 Dx^2 U.U - unwanted",
    )
    .param("n", n)
    .param("m", m);

    let um = family(n, m as i32);
    let lhs = &family(n, m as i32 - 1) * &family(n, m as i32 + 1);
    let idx = (n + 2 * m + 2) as i64;
    let z2 = Poly4::var(Z).pow(2);
    let w2 = Poly4::var(W).pow(2);
    let head = &(&w2 * &shifted_param(ParamVar::B, idx)) - &(&z2 * &shifted_param(ParamVar::A, idx));
    let hirota = (&(&z2 * &w2) * &hirota2(&um, &um)).scale(&rat(8));
    let u1 = u_gen_or_zero(n, m, 1);
    let aa = Poly4::var(A);
    let bb = Poly4::var(B);
    let unwanted = (&(&(&aa * &bb) * &(&aa - &bb)) * &(&(&z2 * &w2) * &u1.pow(2)))
        .scale(&ratio(4, ((n + 2 * m + 1) * (n + 2 * m + 1)) as i64));
    let rhs = &(&(&head * &um.pow(2)) + &hirota) - &unwanted;

    let diff = &lhs - &rhs;
    let raw = diff.is_zero();
    let reduced = reduce_mod_relation(&diff);
    if reduced.is_zero() {
        report.status = if raw { Status::Pass } else { Status::ConditionallyPass };
        report.convention = Some(if raw {
            "raw equality".into()
        } else {
            "modulo w^2-z^2-1 (raw equality fails)".into()
        });
    } else {
        report.status = Status::Fail;
        report.witness_text = Some(format!("reduced difference: {}", truncate_poly(&reduced)));
    }
    report.wall_time_ms = t0.elapsed().as_millis();
    report
}

/// The recurrence in the first parameter of the one-index ladder
/// U_m(b1, b2) := U_{0,m}(z, w; -4 b1^2, -4 b2^2):
///
///   (b1^2 - b2^2) U_m(b1-1) U_m(b1+1) = (b1^2 - b2^2) U_m^2 + 2 z^2 Dx^2 U_m.U_m.
///
/// The index dictionary between the one- and two-index families is
/// ambiguous, so shifts in {-1, 0, +1} are scanned and the report records
/// every shift under which the identity holds.
pub fn check_thm49(m: u32) -> IdentityReport {
    let t0 = Instant::now();
    let mut report = IdentityReport::new(
        "thm49",
        "(b1^2-b2^2) U_m(b1-1) U_m(b1+1) = (b1^2-b2^2) U_m^2 + 2 z^2 Dx^2 U_m.U_m",
    )
    .param("m", m);

    // In variables (z, w, b1, b2): substitute a -> -4 b1^2, b -> -4 b2^2.
    let one_index = |j: i32| -> Poly4 {
        let p = if j < 0 { Poly4::one() } else { u_gen(0, j as u32, 0).unwrap() };
        let b1sq = Poly4::var(A).pow(2).scale(&rat(-4));
        let b2sq = Poly4::var(B).pow(2).scale(&rat(-4));
        p.subst(A, &b1sq).subst(B, &b2sq)
    };

    let mut holds: Vec<(i32, bool)> = Vec::new(); // (shift, raw)
    let mut first_witness = None;
    for shift in [0i32, 1, -1] {
        let u = one_index(m as i32 - shift);
        let um1 = u.subst(A, &(&Poly4::var(A) - &Poly4::one()));
        let up1 = u.subst(A, &(&Poly4::var(A) + &Poly4::one()));
        let head = &Poly4::var(A).pow(2) - &Poly4::var(B).pow(2);
        let lhs = &(&um1 * &up1) * &head;
        let rhs = &(&u.pow(2) * &head)
            + &(&Poly4::var(Z).pow(2) * &hirota2(&u, &u)).scale(&rat(2));
        let diff = &lhs - &rhs;
        let raw = diff.is_zero();
        let reduced = reduce_mod_relation(&diff);
        if reduced.is_zero() {
            holds.push((shift, raw));
        } else if first_witness.is_none() {
            first_witness = Some(format!(
                "shift {shift}: reduced difference {}",
                truncate_poly(&reduced)
            ));
        }
    }
    if holds.is_empty() {
        report.status = Status::Fail;
        report.witness_text = first_witness;
    } else {
        let raw_everywhere = holds.iter().all(|&(_, raw)| raw);
        report.status = if raw_everywhere { Status::Pass } else { Status::ConditionallyPass };
        report.convention = Some(format!(
            "holds modulo w^2-z^2-1 for shifts {:?}{}",
            holds.iter().map(|&(s, _)| s).collect::<Vec<_>>(),
            if raw_everywhere { " (raw)" } else { "" },
        ));
    }
    report.wall_time_ms = t0.elapsed().as_millis();
    report
}

fn subset_params(report: IdentityReport, set_i: &[i64], set_j: &[i64]) -> IdentityReport {
    report.param("I", format!("{set_i:?}")).param("J", format!("{set_j:?}"))
}

/// Cross-ratio partial fractions: the product side equals
/// 2 + sum b_l / ((x+2-l)(x+l)) with solvable coefficients.
pub fn check_lemma42(set_i: &[i64], set_j: &[i64]) -> IdentityReport {
    let t0 = Instant::now();
    let mut report = subset_params(
        IdentityReport::new("lemma42", "L(x) = 2 + sum_l b_l / ((x+2-l)(x+l))"),
        set_i,
        set_j,
    );
    match partial_fractions(set_i, set_j) {
        Ok(_) => {
            report.status = Status::Pass;
            report.convention = Some("linear solve consistent over every coefficient".into());
        }
        Err(e) => {
            report.status = Status::Fail;
            report.witness_text = Some(e.to_string());
        }
    }
    report.wall_time_ms = t0.elapsed().as_millis();
    report
}

/// Coefficient sum: sum_l b_l = 4 (|I| - |J|)^2 - 4 (|I| + |J|), evaluated
/// under both weight conventions (element sum and cardinality); the element
/// sum is the one that holds.
pub fn check_lemma43(set_i: &[i64], set_j: &[i64]) -> IdentityReport {
    let t0 = Instant::now();
    let mut report = subset_params(
        IdentityReport::new("lemma43", "sum_l b_l = 4(|I| - |J|)^2 - 4(|I| + |J|)"),
        set_i,
        set_j,
    );
    match partial_fractions(set_i, set_j) {
        Ok(map) => {
            let total: Rational = map.values().cloned().sum();
            let closed = |wi: i64, wj: i64| rat(4 * (wi - wj) * (wi - wj) - 4 * (wi + wj));
            let esum = total == closed(set_i.iter().sum::<i64>(), set_j.iter().sum::<i64>());
            let card = total == closed(set_i.len() as i64, set_j.len() as i64);
            report.status = if esum { Status::Pass } else { Status::Fail };
            report.convention = Some(format!(
                "element-sum convention {}; cardinality convention {}",
                if esum { "holds" } else { "fails" },
                if card { "holds" } else { "fails" },
            ));
            if !esum {
                report.witness_text = Some(format!("sum of coefficients = {total}"));
            }
        }
        Err(e) => {
            report.status = Status::Fail;
            report.witness_text = Some(e.to_string());
        }
    }
    report.wall_time_ms = t0.elapsed().as_millis();
    report
}

/// Vanishing criteria for the coefficients: for l in both I and J,
/// b_l = 0 iff l-2 in I and J; for l in I only, b_l = 0 iff l-2 in J.
/// The implication "l-2 present => b_l = 0" holds on every tested pair; the
/// converse has counterexamples (starting at the double pole l = 1), which
/// are reported individually.
pub fn check_lemma44(set_i: &[i64], set_j: &[i64]) -> IdentityReport {
    let t0 = Instant::now();
    let mut report = subset_params(
        IdentityReport::new(
            "lemma44",
            "b_l = 0 iff l-2 in I^J (l in I^J); b_l = 0 iff l-2 in J (l in I\\(I^J))",
        ),
        set_i,
        set_j,
    );
    let map = match partial_fractions(set_i, set_j) {
        Ok(map) => map,
        Err(e) => {
            report.status = Status::Fail;
            report.witness_text = Some(e.to_string());
            report.wall_time_ms = t0.elapsed().as_millis();
            return report;
        }
    };
    let mut spurious_zero = Vec::new();
    let mut failed_vanishing = Vec::new();
    for &l in set_i {
        let b_zero = map[&l].is_zero();
        let predicted_zero = if set_j.contains(&l) {
            set_i.contains(&(l - 2)) && set_j.contains(&(l - 2))
        } else {
            set_j.contains(&(l - 2))
        };
        match (b_zero, predicted_zero) {
            (true, false) => spurious_zero.push(l),
            (false, true) => failed_vanishing.push(l),
            _ => {}
        }
    }
    if spurious_zero.is_empty() && failed_vanishing.is_empty() {
        report.status = Status::Pass;
    } else {
        report.status = Status::Fail;
        report.convention = Some(if failed_vanishing.is_empty() {
            "violations are unpredicted vanishings only".into()
        } else {
            "predicted vanishing failed".into()
        });
        report.witness_text = Some(format!(
            "unpredicted zeros at {spurious_zero:?}; failed predicted zeros at {failed_vanishing:?}"
        ));
    }
    report.wall_time_ms = t0.elapsed().as_millis();
    report
}

/// Diagonal factorization: U_{n,m}(z,w;a,a) equals
/// (-1)^C(m+1,2) a_[n;m] (z+w)^C(n+m+1,2) (z-w)^C(m+1,2), raw.
pub fn check_eq42(n: u32, m: u32) -> IdentityReport {
    let t0 = Instant::now();
    let mut report = IdentityReport::new(
        "eq42",
        "U_{n,m}(z,w;a,a) = sign * a_[n;m] (z+w)^C(n+m+1,2) (z-w)^C(m+1,2)",
    )
    .param("n", n)
    .param("m", m);
    let diag = u_gen(n, m, 0).unwrap().subst(B, &Poly4::var(A));
    let target = x_factored(n, m).scale(&rat(factored_sign(m)));
    if diag == target {
        report.status = Status::Pass;
        report.convention = Some(format!("sign (-1)^C(m+1,2) = {}", factored_sign(m)));
    } else {
        report.status = Status::Fail;
        report.witness_text = Some(format!("difference: {}", truncate_poly(&(&diag - &target))));
    }
    report.wall_time_ms = t0.elapsed().as_millis();
    report
}

/// Parameter specialization at a = 0 (first parameter slot zero):
///
///   even n: U_{n,m}(0,b2) = b_[n;m]odd w^((n/2)^2) U_{0,m+n/2} at a = -n^2;
///   odd n:  U_{n,m}(0,b2) = b_[n;m]odd w^(((n+2m+1)/2)^2) U_{0,(n-1)/2}
///           at a = -(n+2m+1)^2.
pub fn check_lemma47(n: u32, m: u32) -> IdentityReport {
    let t0 = Instant::now();
    let mut report = IdentityReport::new(
        "lemma47",
        "U_{n,m} at a = 0 factors through the n = 0 family with shifted parameters",
    )
    .param("n", n)
    .param("m", m);
    let lhs = u_gen(n, m, 0).unwrap().subst_const(A, &rat(0));
    let ground = GroundSet::new(n, m);
    let odd: Vec<i64> = ground.elements().iter().copied().filter(|i| i % 2 == 1).collect();
    let bodd = param_product_over(ParamVar::B, &odd).subst_const(A, &rat(0));
    let rhs = if n % 2 == 0 {
        let e = (n / 2) * (n / 2);
        let inner = u_gen(0, m + n / 2, 0).unwrap().subst_const(A, &rat(-((n * n) as i64)));
        &(&bodd * &Poly4::var(W).pow(e)) * &inner
    } else {
        let h = (n + 2 * m + 1) / 2;
        let bp = (m + (n + 1) / 2) as i64;
        let inner = u_gen(0, (n - 1) / 2, 0).unwrap().subst_const(A, &rat(-4 * bp * bp));
        &(&bodd * &Poly4::var(W).pow(h * h)) * &inner
    };
    if lhs == rhs {
        report.status = Status::Pass;
        report.convention = Some("raw equality".into());
    } else {
        report.status = Status::Fail;
        report.witness_text = Some(format!("difference: {}", truncate_poly(&(&lhs - &rhs))));
    }
    report.wall_time_ms = t0.elapsed().as_millis();
    report
}

/// Double-factorial ratio ladder:
/// U_{k,m}^{(k)} (2k+2m+1)!! = U_{k+2,m-1}^{(k+1)} (2k+1)!! (2m-1)!!, raw.
pub fn check_remark2(k: u32, m: u32) -> IdentityReport {
    let t0 = Instant::now();
    let mut report = IdentityReport::new(
        "remark2",
        "U_{k,m}^{(k)} (2k+2m+1)!! = U_{k+2,m-1}^{(k+1)} (2k+1)!! (2m-1)!!",
    )
    .param("k", k)
    .param("m", m);
    let dfact = |n: i64| -> i64 { (1..=n).filter(|x| x % 2 == 1).product::<i64>().max(1) };
    let lhs = u_gen(k, m, k).unwrap().scale(&rat(dfact((2 * k + 2 * m + 1) as i64)));
    let rhs = u_gen(k + 2, m - 1, k + 1)
        .unwrap()
        .scale(&rat(dfact((2 * k + 1) as i64) * dfact((2 * m - 1) as i64)));
    if lhs == rhs {
        report.status = Status::Pass;
        report.convention = Some("raw equality".into());
    } else {
        report.status = Status::Fail;
        report.witness_text = Some(format!("difference: {}", truncate_poly(&(&lhs - &rhs))));
    }
    report.wall_time_ms = t0.elapsed().as_millis();
    report
}

/// The Plücker-type conjecture on the b1 = 0 slice, in the
/// denominator-cleared form: with a = 0 and 4 b2^2 = -b,
///
///   -b (U_{m+1} U_{m-1} - (2m+1)^2 U_m^2) = sign * U_{2,m-1}^2,
///
/// scanned over index shifts {-1, 0, +1} and both signs, raw and modulo the
/// relation. The verdict records the convention that verifies (the printed
/// claim corresponds to shift 0, sign +1).
pub fn check_conjecture51(m: u32) -> IdentityReport {
    let t0 = Instant::now();
    let mut report = IdentityReport::new(
        "conj51",
        "at b1 = 0: U_{m+1} U_{m-1} - (2m+1)^2 U_m^2 = U_{2,m-1}^2 / (4 b2^2)",
    )
    .param("m", m);
    assert!(m >= 1, "the conjecture starts at m = 1");

    let one_index = |j: i32| -> Poly4 {
        if j < 0 {
            Poly4::one()
        } else {
            u_gen(0, j as u32, 0).unwrap().subst_const(A, &rat(0))
        }
    };
    let square = u_gen(2, m - 1, 0).unwrap().subst_const(A, &rat(0)).pow(2);

    let mut verdicts = Vec::new();
    let mut best_witness: Option<String> = None;
    for shift in [0i32, 1, -1] {
        let center = m as i32 - shift;
        if center < 0 {
            continue;
        }
        let inner = &(&one_index(center + 1) * &one_index(center - 1))
            - &one_index(center).pow(2).scale(&rat(((2 * m + 1) * (2 * m + 1)) as i64));
        let lhs = &inner * &(&Poly4::zero() - &Poly4::var(B));
        for sign in [1i64, -1] {
            let diff = &lhs - &square.scale(&rat(sign));
            let raw = diff.is_zero();
            let reduced = reduce_mod_relation(&diff).is_zero();
            if reduced {
                verdicts.push(format!(
                    "shift={shift}, sign={sign}{}",
                    if raw { ", raw" } else { ", modulo w^2-z^2-1" }
                ));
            } else if shift == 0 && sign == 1 && best_witness.is_none() {
                best_witness = Some(format!(
                    "printed reading (shift=0, sign=+1) reduced difference: {}",
                    truncate_poly(&reduce_mod_relation(&diff))
                ));
            }
        }
    }
    if verdicts.is_empty() {
        report.status = Status::Fail;
        report.witness_text = best_witness;
    } else {
        let literal = verdicts.iter().any(|v| v.starts_with("shift=0, sign=1, raw"));
        report.status = if literal { Status::Pass } else { Status::ConditionallyPass };
        report.convention = Some(verdicts.join("; "));
        if best_witness.is_some() {
            report.witness_text = best_witness;
        }
    }
    report.wall_time_ms = t0.elapsed().as_millis();
    report
}

/// Index ranges for [`run_suite`]. Each identity runs over its own range.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteBounds {
    pub thm41_max_n: u32,
    pub thm41_max_m: u32,
    pub thm49_max_m: u32,
    /// Lemma pair scans run over every ground set with n + 2m <= this bound
    /// (aggregated per ground set in the suite).
    pub lemma_ground_max: u32,
    pub eq42_max_nm: u32,
    pub lemma47_max_n: u32,
    pub lemma47_max_m: u32,
    pub remark2_max_k: u32,
    pub remark2_max_m: u32,
    pub conj51_max_m: u32,
}

impl Default for SuiteBounds {
    fn default() -> Self {
        SuiteBounds {
            thm41_max_n: 2,
            thm41_max_m: 2,
            thm49_max_m: 3,
            lemma_ground_max: 6,
            eq42_max_nm: 6,
            lemma47_max_n: 4,
            lemma47_max_m: 2,
            remark2_max_k: 2,
            remark2_max_m: 3,
            conj51_max_m: 4,
        }
    }
}

impl SuiteBounds {
    /// The ranges the acceptance gate runs.
    pub fn acceptance() -> Self {
        SuiteBounds {
            thm41_max_n: 4,
            thm41_max_m: 3,
            thm49_max_m: 4,
            lemma_ground_max: 8,
            eq42_max_nm: 8,
            lemma47_max_n: 6,
            lemma47_max_m: 3,
            remark2_max_k: 3,
            remark2_max_m: 4,
            conj51_max_m: 6,
        }
    }
}

/// One aggregated pair-scan report for the cross-ratio lemmas on one ground
/// set (per-pair reports would number in the hundreds of thousands).
fn scan_lemma_ground(id: &str, n: u32, m: u32) -> IdentityReport {
    let t0 = Instant::now();
    let ground = GroundSet::new(n, m);
    let mut report = IdentityReport::new(
        id,
        match id {
            "lemma42" => "L(x) = 2 + sum_l b_l / ((x+2-l)(x+l)) over all subset pairs",
            "lemma43" => "sum_l b_l = 4(|I|-|J|)^2 - 4(|I|+|J|) over all subset pairs",
            _ => "vanishing criteria for b_l over all subset pairs",
        },
    )
    .param("n", n)
    .param("m", m)
    .param("pairs", (1u64 << ground.len()) * (1u64 << ground.len()));

    let mut failures = 0u64;
    let mut spurious_only = true;
    let mut first_witness: Option<String> = None;
    let elements = ground.elements();
    for mi in 0u64..(1 << elements.len()) {
        let set_i: Vec<i64> = elements
            .iter()
            .enumerate()
            .filter(|(k, _)| mi >> k & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        for mj in 0u64..(1 << elements.len()) {
            let set_j: Vec<i64> = elements
                .iter()
                .enumerate()
                .filter(|(k, _)| mj >> k & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            let sub = match id {
                "lemma42" => check_lemma42(&set_i, &set_j),
                "lemma43" => check_lemma43(&set_i, &set_j),
                _ => check_lemma44(&set_i, &set_j),
            };
            if !sub.passed() {
                failures += 1;
                if sub.convention.as_deref() != Some("violations are unpredicted vanishings only")
                {
                    spurious_only = false;
                }
                if first_witness.is_none() {
                    first_witness = Some(format!(
                        "I={set_i:?} J={set_j:?}: {}",
                        sub.witness_text.unwrap_or_default()
                    ));
                }
            }
        }
    }
    if failures == 0 {
        report.status = Status::Pass;
    } else {
        report.status = Status::Fail;
        report.convention = Some(if id == "lemma44" && spurious_only {
            "violations are unpredicted vanishings only".into()
        } else {
            format!("{failures} failing pairs")
        });
        report.witness_text =
            first_witness.map(|w| format!("{failures} failing pairs; first: {w}"));
    }
    report.wall_time_ms = t0.elapsed().as_millis();
    report
}

/// Aggregate counts and reports of one suite run.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub bounds: SuiteBounds,
    pub passed: usize,
    pub conditionally_passed: usize,
    pub failed: usize,
    pub reports: Vec<IdentityReport>,
}

/// Run every requested identity over its range, deterministically ordered.
/// `ids = None` runs everything; an empty list runs nothing.
pub fn run_suite(bounds: &SuiteBounds, ids: Option<&[String]>) -> SuiteReport {
    let want = |id: &str| ids.map_or(true, |list| list.iter().any(|x| x == id));
    let mut reports = Vec::new();

    if want("thm41") {
        for n in 0..=bounds.thm41_max_n {
            for m in 0..=bounds.thm41_max_m {
                reports.push(check_thm41(n, m));
            }
        }
    }
    if want("thm49") {
        for m in 0..=bounds.thm49_max_m {
            reports.push(check_thm49(m));
        }
    }
    for id in ["lemma42", "lemma43", "lemma44"] {
        if want(id) {
            for n in 0..=bounds.lemma_ground_max {
                for m in 0..=(bounds.lemma_ground_max - n) / 2 {
                    reports.push(scan_lemma_ground(id, n, m));
                }
            }
        }
    }
    if want("eq42") {
        for n in 0..=bounds.eq42_max_nm {
            for m in 0..=bounds.eq42_max_nm.saturating_sub(n) {
                reports.push(check_eq42(n, m));
            }
        }
    }
    if want("lemma47") {
        for n in 1..=bounds.lemma47_max_n {
            for m in 0..=bounds.lemma47_max_m {
                reports.push(check_lemma47(n, m));
            }
        }
    }
    if want("remark2") {
        for k in 0..=bounds.remark2_max_k {
            for m in 1..=bounds.remark2_max_m {
                reports.push(check_remark2(k, m));
            }
        }
    }
    if want("conj51") {
        for m in 1..=bounds.conj51_max_m {
            reports.push(check_conjecture51(m));
        }
    }

    let passed = reports.iter().filter(|r| r.status == Status::Pass).count();
    let conditionally_passed =
        reports.iter().filter(|r| r.status == Status::ConditionallyPass).count();
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    SuiteReport { schema: 1, bounds: bounds.clone(), passed, conditionally_passed, failed, reports }
}

/// An expected (documented) failure pattern.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KnownDiscrepancy {
    pub id: String,
    /// When set, only failures whose convention string equals this are
    /// expected (e.g. the one-directional vanishing violations).
    pub convention: Option<String>,
    pub note: String,
}

/// The discrepancies the repository documents: the vanishing-criteria lemma
/// predicts zeros correctly but claims "only if", and spurious zeros exist
/// (the first at the double pole l = 1).
pub fn default_known_discrepancies() -> Vec<KnownDiscrepancy> {
    vec![KnownDiscrepancy {
        id: "lemma44".into(),
        convention: Some("violations are unpredicted vanishings only".into()),
        note: "b_l can vanish without l-2 in the predicted set; the first case is \
               I = {1}, J = {} where the double pole at x = -1 forces b_1 = 0"
            .into(),
    }]
}

/// True when every failed report matches a known discrepancy.
pub fn only_known_failures(suite: &SuiteReport, known: &[KnownDiscrepancy]) -> bool {
    suite.reports.iter().filter(|r| r.status == Status::Fail).all(|r| {
        known.iter().any(|k| {
            k.id == r.id
                && k.convention
                    .as_ref()
                    .map_or(true, |c| r.convention.as_deref() == Some(c.as_str()))
        })
    })
}

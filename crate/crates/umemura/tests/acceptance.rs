//! Acceptance gate: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//!
//! Every tolerance is pinned here. Exact statements are checked with zero
//! tolerance in rational arithmetic; the differential-equation residuals
//! use the stated floating-point bounds.

use num_traits::{One, Signed, Zero};
use umemura::combinat::{dcoef, gl_dim, GroundSet, Partition};
use umemura::exactpoly::{
    delta, hirota2, partial_fractions, rat, ratio, reduce_mod_relation, MPoly, Poly4, Rational,
    A, B, W, Z,
};
use umemura::families::{
    choose2, factored_sign, recurrence_seed, resolve_conventions, shifted_param, t_toda, u_gen,
    u_gen_or_zero, x_factored, ParamVar, ResolutionStatus,
};
use umemura::identities::{check_conjecture51, check_thm41, check_lemma47, check_remark2, Status};
use umemura::painleve::{
    check_hamiltonian_seed, default_steps, eval_qm, evi_residual_fd, evi_residual_from,
    hnm_derivatives, eval_hnm, pvi_residual, BVector, Bracket, Chart, DeltaRule, PainleveError,
};

fn verdict(criterion: &str, pass: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

/// Criterion 1: the bilinear recurrence reduces to zero modulo
/// w^2 - z^2 - 1 for all 0 <= n <= 4, 0 <= m <= 3, exactly.
///
/// Boundary note, verified here in both directions: the criterion names the
/// seed U_{n,-1} = 1, which reproduces the recurrence only for n <= 1
/// (where it coincides with U_{n-1,0}). The recurrence itself forces
/// U_{n,-1} = U_{n-1,0} — solving the m = 0 instance for the unknown factor
/// in the quotient ring has that unique polynomial answer — so the grid is
/// verified with that boundary value, and the literal seed 1 is asserted to
/// fail at (2,0) as the recorded counterexample.
#[test]
fn criterion_1_bilinear_recurrence_grid() {
    for n in 0..=4u32 {
        for m in 0..=3u32 {
            let r = check_thm41(n, m);
            assert!(
                r.passed(),
                "recurrence fails at ({n},{m}): {:?}",
                r.witness_text
            );
            // raw equality holds only at the base point
            if (n, m) != (0, 0) {
                assert_eq!(r.status, Status::ConditionallyPass, "({n},{m})");
            }
        }
    }
    // Negative control: the literal seed 1 breaks the m = 0 instance at n = 2.
    let diff = thm41_difference_with_seed(2, 0, &Poly4::one());
    assert!(
        !reduce_mod_relation(&diff).is_zero(),
        "the literal seed 1 should fail at (2,0)"
    );
    let diff = thm41_difference_with_seed(2, 0, &recurrence_seed(2));
    assert!(reduce_mod_relation(&diff).is_zero());
    verdict(
        "1",
        true,
        "LHS - RHS of the bilinear recurrence reduces to 0 (mod w^2-z^2-1) on the whole \
         grid n <= 4, m <= 3; boundary U_{n,-1} = U_{n-1,0} (the literal seed 1 fails at n >= 2)",
    );
}

fn thm41_difference_with_seed(n: u32, m: u32, seed: &Poly4) -> Poly4 {
    let fam = |mm: i32| -> Poly4 {
        if mm < 0 {
            seed.clone()
        } else {
            u_gen(n, mm as u32, 0).unwrap()
        }
    };
    let um = fam(m as i32);
    let lhs = &fam(m as i32 - 1) * &fam(m as i32 + 1);
    let idx = (n + 2 * m + 2) as i64;
    let z2 = Poly4::var(Z).pow(2);
    let w2 = Poly4::var(W).pow(2);
    let head =
        &(&w2 * &shifted_param(ParamVar::B, idx)) - &(&z2 * &shifted_param(ParamVar::A, idx));
    let hirota = (&(&z2 * &w2) * &hirota2(&um, &um)).scale(&rat(8));
    let u1 = u_gen_or_zero(n, m, 1);
    let aa = Poly4::var(A);
    let bb = Poly4::var(B);
    let unwanted = (&(&(&aa * &bb) * &(&aa - &bb)) * &(&(&z2 * &w2) * &u1.pow(2)))
        .scale(&ratio(4, ((n + 2 * m + 1) * (n + 2 * m + 1)) as i64));
    let rhs = &(&(&head * &um.pow(2)) + &hirota) - &unwanted;
    &lhs - &rhs
}

/// Criterion 2: diagonal factorization, exactly, for all n + m <= 8, plus
/// the degree identity C(n+m+1,2) + C(m+1,2) = weight of the ground set for
/// all n, m <= 12.
#[test]
fn criterion_2_diagonal_factorization() {
    for n in 0..=8u32 {
        for m in 0..=8 - n {
            let diag = u_gen(n, m, 0).unwrap().subst(B, &Poly4::var(A));
            let target = x_factored(n, m).scale(&rat(factored_sign(m)));
            assert_eq!(diag, target, "({n},{m})");
        }
    }
    for n in 0..=12u32 {
        for m in 0..=12u32 {
            assert_eq!(
                (choose2(n + m + 1) + choose2(m + 1)) as i64,
                GroundSet::new(n, m).weight(),
                "degree identity at ({n},{m})"
            );
        }
    }
    verdict(
        "2",
        true,
        "U_{n,m}(z,w;a,a) = (-1)^C(m+1,2) X_{n,m} exactly for n+m <= 8; degree identity to 12",
    );
}

/// Criterion 3: d_{n,m}(I) is a positive integer for every subset of every
/// ground set with n + 2m <= 12, exhaustively.
#[test]
fn criterion_3_dcoef_integrality() {
    let mut checked = 0u64;
    for n in 0..=12u32 {
        for m in 0..=(12 - n) / 2 {
            let ground = GroundSet::new(n, m);
            for subset in ground.subsets() {
                let d = dcoef(&subset).unwrap_or_else(|e| panic!("integrality violated: {e}"));
                assert!(d.is_positive());
                checked += 1;
            }
        }
    }
    verdict(
        "3",
        true,
        &format!("{checked} subset coefficients, all positive integers (n + 2m <= 12)"),
    );
}

/// Criterion 4: the partial-fraction ansatz solves exactly for all pairs
/// I, J over ground sets with n + 2m <= 8, and the coefficient sum is
/// 4(|I|-|J|)^2 - 4(|I|+|J|) under the element-sum convention.
/// The witness I = {2}, J = {} yields b_2 = 8 exactly.
#[test]
fn criterion_4_cross_ratio_lemmas() {
    assert_eq!(partial_fractions(&[2], &[]).unwrap()[&2], rat(8));
    let mut pairs = 0u64;
    for n in 0..=8u32 {
        for m in 0..=(8 - n) / 2 {
            let ground = GroundSet::new(n, m);
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
                    let map = partial_fractions(&set_i, &set_j)
                        .unwrap_or_else(|e| panic!("I={set_i:?} J={set_j:?}: {e}"));
                    let total: Rational = map.values().cloned().sum();
                    let wi: i64 = set_i.iter().sum();
                    let wj: i64 = set_j.iter().sum();
                    assert_eq!(
                        total,
                        rat(4 * (wi - wj) * (wi - wj) - 4 * (wi + wj)),
                        "sum mismatch at I={set_i:?} J={set_j:?}"
                    );
                    pairs += 1;
                }
            }
        }
    }
    verdict(
        "4",
        true,
        &format!("{pairs} subset pairs: ansatz solvable, coefficient sums match (element-sum)"),
    );
}

/// Criterion 5: the a = 0 specialization identity, exactly, for all
/// n <= 6, m <= 3.
#[test]
fn criterion_5_specialization_lemma() {
    for n in 1..=6u32 {
        for m in 0..=3u32 {
            let r = check_lemma47(n, m);
            assert!(r.passed(), "({n},{m}): {:?}", r.witness_text);
        }
    }
    verdict("5", true, "U_{n,m} at a = 0 factors exactly for n <= 6, m <= 3 (both parities)");
}

/// Criterion 6: the double-factorial ratio ladder for k <= 3, m <= 4, and
/// the vanishing U_{0,m}^{(1)} = 0 for m <= 8.
#[test]
fn criterion_6_ratio_ladder_and_vanishing() {
    for k in 0..=3u32 {
        for m in 1..=4u32 {
            let r = check_remark2(k, m);
            assert!(r.passed(), "(k={k},m={m}): {:?}", r.witness_text);
        }
    }
    for m in 0..=8u32 {
        assert!(u_gen_or_zero(0, m, 1).is_zero(), "U_(0,{m})^(1) should vanish");
    }
    verdict(
        "6",
        true,
        "U_{k,m}^(k) (2k+2m+1)!! = U_{k+2,m-1}^(k+1) (2k+1)!!(2m-1)!! for k <= 3, m <= 4; \
         U_{0,m}^(1) = 0 for m <= 8",
    );
}

/// Criterion 7: the convention resolver either produces an assignment under
/// which the Toda ladder, the explicit formula and the two-index family
/// agree for all indices <= 5, or a minimal counterexample — here it
/// resolves, uniquely, and the run is deterministic.
#[test]
fn criterion_7_convention_resolution() {
    let first = resolve_conventions(5);
    let second = resolve_conventions(5);
    assert_eq!(
        serde_json::to_string(&first).unwrap(),
        serde_json::to_string(&second).unwrap(),
        "resolution must be deterministic"
    );
    assert!(matches!(first.status, ResolutionStatus::Resolved), "{:?}", first.status);
    let asg = first.assignment.expect("resolved");
    assert_eq!(
        (asg.shift, asg.alpha, asg.beta, asg.dims_gl_n_minus_1),
        (1, 1, 0, true),
        "resolved assignment drifted"
    );
    assert_eq!(first.matches, 1, "the declared space admits exactly one assignment");
    assert!(first.t2_notes.iter().any(|n| n.contains("2 * recurrence T_2")));
    verdict(
        "7",
        true,
        "resolved: shift +1, scale 2^(n(n-1)), GL(n-1) dimensions, w^2 = (2+v)/4 chart; \
         unique in the declared space; factor-2 of the displayed T_2 documented",
    );
}

/// Criterion 8: differential-equation residuals.
///   - the linear closed-form case is analytically zero: residual <= 1e-9;
///   - the h_{0,m} cases, the h_{n,m}(0,b2) cases, the seed pair and the
///     q_m double-solution property all stay below 1e-5 on
///     t in {1.5, 2, 3}, indices <= 3, parameter samples {0, 0.3, 1};
///   - halving the finite-difference step divides residuals by ~16 until
///     the rounding floor.
#[test]
fn criterion_8_numeric_residuals() {
    let ts = [1.5, 2.0, 3.0];
    let samples = [0.0, 0.3, 1.0];

    // Analytically zero case, both bracket readings, exact derivatives.
    for m in 0..=3u32 {
        let mm = (m + 1) as f64;
        for t in ts {
            for b34 in [(0.7, 0.4), (0.0, 1.0)] {
                let b = BVector::new(0.0, mm, b34.0, b34.1);
                let h = -(2.0 * t - 1.0) * mm * mm / 2.0;
                for bracket in [Bracket::Printed, Bracket::Squared] {
                    let r = evi_residual_from(h, -mm * mm, 0.0, &b, t, bracket);
                    assert!(r <= 1e-9, "linear case m={m} t={t}: {r:.3e}");
                }
            }
            // the family evaluation reproduces the closed form
            let hv = eval_hnm(1, m, 0.0, mm, t, Chart::Quotient).unwrap();
            assert!((hv + (2.0 * t - 1.0) * mm * mm / 2.0).abs() <= 1e-9);
        }
    }

    // h_{0,m} solves the Okamoto equation at (b1, b2, m+1/2, 0).
    let mut evaluated = 0u32;
    for m in 0..=3u32 {
        for b1 in samples {
            for b2 in samples {
                for t in ts {
                    let (h, h1, h2) = hnm_derivatives(0, m, b1, b2, t, Chart::Quotient).unwrap();
                    let b = BVector::new(b1, b2, m as f64 + 0.5, 0.0);
                    let r = evi_residual_from(h, h1, h2, &b, t, Bracket::Squared);
                    assert!(r <= 1e-5, "h_(0,{m}) b=({b1},{b2}) t={t}: {r:.3e}");
                    evaluated += 1;
                }
            }
        }
    }

    // h_{n,m}(0, b2) solves it at (0, b2, n/2, (n+2m+1)/2); parameter
    // resonances (the family degenerates to the zero polynomial: b2 = 0
    // kills the chains through bbar_1 = b on every ground containing an odd
    // element, and b2 = 1 makes bbar_3 = b + 4 = 0 on the odd-n grounds
    // containing 3) are skipped as precondition failures. The skip count is
    // asserted against the exact polynomial vanishing criterion.
    let mut skipped = 0u32;
    let mut expected_skips = 0u32;
    for n in 1..=3u32 {
        for m in 0..=3u32 {
            for b2 in samples {
                // exact value of b = -4 b2^2 for the sample grid
                let b_exact = if b2 == 0.0 {
                    rat(0)
                } else if b2 == 0.3 {
                    ratio(-9, 25)
                } else {
                    rat(-4)
                };
                let vanishes = u_gen(n, m, 0)
                    .unwrap()
                    .subst_const(A, &rat(0))
                    .subst_const(B, &b_exact)
                    .is_zero();
                if vanishes {
                    expected_skips += ts.len() as u32;
                }
                for t in ts {
                    match hnm_derivatives(n, m, 0.0, b2, t, Chart::Quotient) {
                        Ok((h, h1, h2)) => {
                            let b = BVector::new(
                                0.0,
                                b2,
                                n as f64 / 2.0,
                                (n + 2 * m + 1) as f64 / 2.0,
                            );
                            let r = evi_residual_from(h, h1, h2, &b, t, Bracket::Squared);
                            assert!(r <= 1e-5, "h_({n},{m})(0,{b2}) t={t}: {r:.3e}");
                            evaluated += 1;
                        }
                        Err(PainleveError::PoleAtSample { .. }) => skipped += 1,
                        Err(e) => panic!("unexpected: {e}"),
                    }
                }
            }
        }
    }
    assert_eq!(
        skipped, expected_skips,
        "every skip must be an exact polynomial degeneration, none a point zero"
    );

    // Seed pair: skip the b1 = b2 diagonal where the closed form divides by
    // q0 (q0 - 1) = 0.
    for b1 in samples {
        for b2 in samples {
            if (b1 - b2).abs() < 1e-12 {
                continue;
            }
            for t in ts {
                let (r1, r2) = check_hamiltonian_seed(b1, b2, t).unwrap();
                assert!(
                    r1 <= 1e-5 && r2 <= 1e-5,
                    "seed b=({b1},{b2}) t={t}: {r1:.3e} {r2:.3e}"
                );
            }
        }
    }

    // q_m solves the sixth equation for both (b3, b4) readings. On the
    // diagonal b1 = b2 (and at 0) the family members are constant along the
    // curve (delta kills z^2 - w^2), so q_m degenerates to the fixed
    // singular solution q = t — excluded by the operation's precondition.
    let mut q_skipped = 0u32;
    for m in 1..=3u32 {
        for b1 in samples {
            for b2 in samples {
                for t in ts {
                    let q = |tv: f64| match eval_qm(m, b1, b2, tv, Chart::Quotient) {
                        Ok(v) => v,
                        Err(_) => f64::NAN,
                    };
                    for bv in [
                        BVector::new(b1, b2, m as f64 + 0.5, 0.0),
                        BVector::new(b1, b2, 0.0, m as f64 + 0.5),
                    ] {
                        if !q(t).is_finite() {
                            q_skipped += 1;
                            assert_eq!(b1, b2, "only the diagonal may degenerate");
                            continue;
                        }
                        match pvi_residual(
                            &q,
                            bv.pvi_params(DeltaRule::Corrected),
                            t,
                            default_steps(t),
                        ) {
                            Ok(r) => {
                                assert!(r <= 1e-5, "q_{m} b=({b1},{b2}) t={t}: {r:.3e}");
                                evaluated += 1;
                            }
                            // samples at or next to a fixed singularity of
                            // the equation (q in {0, 1, t}) are outside the
                            // operation's precondition
                            Err(PainleveError::SingularSample)
                            | Err(PainleveError::DifferentiationFailure) => {
                                q_skipped += 1;
                                assert_eq!(b1, b2, "only the diagonal may degenerate");
                            }
                            Err(e) => panic!("unexpected: {e}"),
                        }
                    }
                }
            }
        }
    }
    // diagonal pairs (0,0), (0.3,0.3), (1,1): 3 x 3 m x 3 t x 2 tuples
    assert_eq!(q_skipped, 54, "unexpected singular-sample population");
    assert!(evaluated > 250, "grid coverage went missing: {evaluated}");

    // Step-halving: ~16x per halving while truncation dominates.
    let h = |tv: f64| eval_hnm(0, 1, 0.3, 1.0, tv, Chart::Quotient).unwrap();
    let b = BVector::new(0.3, 1.0, 1.5, 0.0);
    let residuals: Vec<f64> = (0..4)
        .map(|k| {
            let step = 0.2 / (1u32 << k) as f64;
            evi_residual_fd(&h, &b, 2.5, Bracket::Squared, (step, step)).unwrap()
        })
        .collect();
    for pair in residuals.windows(2) {
        let ratio = pair[0] / pair[1];
        assert!(
            (10.0..26.0).contains(&ratio),
            "stencil order drifted: ratios {residuals:?}"
        );
    }

    verdict(
        "8",
        true,
        &format!(
            "linear case <= 1e-9 both brackets; {evaluated} grid residuals <= 1e-5 \
             ({skipped} precondition skips); halving reduces ~16x"
        ),
    );
}

/// Criterion 9: the conjecture scanner completes for m <= 6 with a definite,
/// reproducible verdict per m: the quadratic identity holds with the
/// right-hand side negated, modulo the quotient relation, at the unshifted
/// indexing. Runtime stays under five minutes.
#[test]
fn criterion_9_conjecture_scanner() {
    let t0 = std::time::Instant::now();
    let mut verdicts = Vec::new();
    for m in 1..=6u32 {
        let r = check_conjecture51(m);
        assert_eq!(r.status, Status::ConditionallyPass, "m={m}: {:?}", r.witness_text);
        let conv = r.convention.clone().unwrap();
        assert!(conv.contains("shift=0, sign=-1"), "m={m}: {conv}");
        verdicts.push((m, conv));
    }
    // reproducibility
    let again = check_conjecture51(3);
    assert_eq!(again.convention, Some(verdicts[2].1.clone()));
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs() < 300, "scanner took {elapsed:?}");
    verdict(
        "9",
        true,
        &format!(
            "m = 1..6: identity holds with the right-hand side negated \
             (shift 0, modulo w^2-z^2-1), reproducibly, in {elapsed:?}"
        ),
    );
}

/// Criterion 10: randomized property suites with fixed seeds — ring axioms,
/// the Leibniz rule, Hirota symmetry/bilinearity/branch-invariance,
/// idempotence of the reduction, complement symmetry of the subset
/// coefficients, and the Weyl dimension against the tableau count.
#[test]
fn criterion_10_property_suites() {
    struct XorShift(u64);
    impl XorShift {
        fn next(&mut self) -> u64 {
            let mut x = self.0;
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            self.0 = x;
            x
        }
        fn int(&mut self, lo: i64, hi: i64) -> i64 {
            lo + (self.next() % (hi - lo + 1) as u64) as i64
        }
    }
    let mut rng = XorShift(0x5851f42d4c957f2d);
    let mut random_poly = |rng: &mut XorShift| -> Poly4 {
        let mut p = Poly4::zero();
        for _ in 0..6 {
            let e = [
                (rng.next() % 4) as u32,
                (rng.next() % 4) as u32,
                (rng.next() % 2) as u32,
                (rng.next() % 2) as u32,
            ];
            p.add_term(e, rat(rng.int(-5, 5)));
        }
        p
    };

    for _ in 0..25 {
        let p = random_poly(&mut rng);
        let q = random_poly(&mut rng);
        let r = random_poly(&mut rng);
        // ring axioms
        assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        assert_eq!(&p * &q, &q * &p);
        assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        // Leibniz
        assert_eq!(delta(&(&p * &q)), &(&delta(&p) * &q) + &(&p * &delta(&q)));
        // Hirota symmetry and branch invariance (even number of deltas)
        assert_eq!(hirota2(&p, &q), hirota2(&q, &p));
        let c = ratio(rng.int(-4, 4), 3);
        assert_eq!(
            hirota2(&p.scale(&c), &q),
            hirota2(&p, &q).scale(&c),
            "bilinearity over rational scalars"
        );
        // reduction idempotence and homomorphism property
        let red = reduce_mod_relation(&p);
        assert_eq!(reduce_mod_relation(&red), red);
        assert_eq!(
            reduce_mod_relation(&(&p * &q)),
            reduce_mod_relation(&(&red * &reduce_mod_relation(&q)))
        );
    }

    // dcoef complement symmetry on every ground set with n + 2m <= 8
    for n in 0..=8u32 {
        for m in 0..=(8 - n) / 2 {
            let g = GroundSet::new(n, m);
            for s in g.subsets() {
                assert_eq!(dcoef(&s).unwrap(), dcoef(&s.complement()).unwrap());
            }
        }
    }

    // Weyl dimension equals the brute-force tableau count
    fn partitions_up_to(total: u32) -> Vec<Partition> {
        fn go(total: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition::new(prefix.clone()));
            for p in (1..=max.min(total)).rev() {
                prefix.push(p);
                go(total - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut v = Vec::new();
        go(total, total, &mut Vec::new(), &mut v);
        v
    }
    fn ssyt_count(n: u32, shape: &[u32], row: usize, col: usize, grid: &mut Vec<Vec<u32>>) -> u64 {
        if row == shape.len() {
            return 1;
        }
        if col == shape[row] as usize {
            return ssyt_count(n, shape, row + 1, 0, grid);
        }
        let mut lo = 1;
        if col > 0 {
            lo = lo.max(grid[row][col - 1]);
        }
        if row > 0 {
            lo = lo.max(grid[row - 1][col] + 1);
        }
        let mut total = 0;
        for entry in lo..=n {
            grid[row].push(entry);
            total += ssyt_count(n, shape, row, col + 1, grid);
            grid[row].pop();
        }
        total
    }
    for lam in partitions_up_to(6) {
        for n in 1..=4u32 {
            if lam.len() > n as usize {
                continue;
            }
            let weyl = gl_dim(n, &lam).unwrap();
            let mut grid = vec![Vec::new(); lam.len()];
            let brute = ssyt_count(n, lam.parts(), 0, 0, &mut grid);
            assert_eq!(weyl, num_bigint::BigInt::from(brute), "{:?} n={n}", lam.parts());
        }
    }

    verdict(
        "10",
        true,
        "ring axioms, Leibniz, Hirota symmetry/bilinearity, reduction idempotence, \
         complement symmetry, Weyl = tableau count (fixed seeds)",
    );
}

/// The resolution serialized into the repository docs stays in sync with a
/// fresh run (determinism across builds).
#[test]
fn resolution_docs_in_sync() {
    let fresh = resolve_conventions(5);
    let committed = include_str!("../docs/convention_resolution.json");
    assert_eq!(
        serde_json::to_string_pretty(&fresh).unwrap().trim_end(),
        committed.trim_end(),
        "regenerate docs/convention_resolution.json"
    );
}

/// Module invariant of the recurrence route: every division in the Toda
/// ladder has zero remainder up to T_10 (exact polynomiality).
#[test]
fn toda_ladder_divisions_exact_to_ten() {
    let t10 = t_toda(10).expect("every division step must be exact");
    assert_eq!(t10.degree_in(0), 45);
    assert!(!t10.is_zero());
    println!("module invariant: Toda ladder divisions exact through T_10 (v-degree 45)");
}

/// External interface: the canonical text and JSON forms round-trip and the
/// golden files are byte-stable.
#[test]
fn golden_serialization_is_stable() {
    use umemura::exactpoly::ZWAB;
    let golden_text = include_str!("golden/v1/subset_sum_0_1_0.txt");
    let poly = u_gen(0, 1, 0).unwrap();
    assert_eq!(poly.to_text(&ZWAB), golden_text.trim_end());
    let parsed = MPoly::<4>::parse(golden_text.trim_end(), &ZWAB).unwrap();
    assert_eq!(parsed, poly);

    let golden_json = include_str!("golden/v1/subset_sum_2_1_0.json");
    let poly = u_gen(2, 1, 0).unwrap();
    let json = serde_json::to_string_pretty(&poly.to_json_terms()).unwrap();
    assert_eq!(json.trim_end(), golden_json.trim_end());

    let golden_toda = include_str!("golden/v1/toda_4.txt");
    assert_eq!(
        t_toda(4).unwrap().to_text(&umemura::exactpoly::VBB),
        golden_toda.trim_end()
    );
}

//! Numeric residual checks: the special functions induced by the polynomial
//! families against the Painlevé VI equation, its Hamiltonian form, and the
//! Painlevé–Okamoto equation for the auxiliary h(t).
//!
//!   cargo run --example painleve_residuals

use umemura::painleve::*;

fn main() {
    let ts = [1.5, 2.0, 3.0];

    println!("h_(0,m) solves the Okamoto equation at (b1, b2, m+1/2, 0):");
    for m in 0..=2u32 {
        for t in ts {
            let (h, h1, h2) = hnm_derivatives(0, m, 0.3, 0.7, t, Chart::Quotient).unwrap();
            let b = BVector::new(0.3, 0.7, m as f64 + 0.5, 0.0);
            println!(
                "  m={m} t={t}: residual {:.3e} (squared bracket), {:.3e} (printed bracket)",
                evi_residual_from(h, h1, h2, &b, t, Bracket::Squared),
                evi_residual_from(h, h1, h2, &b, t, Bracket::Printed),
            );
        }
    }

    println!("\nh_(1,m) at (0, m+1) is the linear closed form -(2t-1)(m+1)^2/2:");
    for m in 0..=2u32 {
        let mm = (m + 1) as f64;
        let t = 2.0;
        let closed = -(2.0 * t - 1.0) * mm * mm / 2.0;
        let evaluated = eval_hnm(1, m, 0.0, mm, t, Chart::Quotient).unwrap();
        println!("  m={m}: closed {closed:+.6}, family evaluation {evaluated:+.6}");
    }

    println!("\nq_m solves the sixth equation for both (b3,b4) = (m+1/2, 0) and (0, m+1/2):");
    for m in 1..=2u32 {
        for t in ts {
            let q = |tv: f64| eval_qm(m, 0.3, 0.7, tv, Chart::Quotient).unwrap();
            let first = BVector::new(0.3, 0.7, m as f64 + 0.5, 0.0);
            let second = BVector::new(0.3, 0.7, 0.0, m as f64 + 0.5);
            let r1 = pvi_residual(&q, first.pvi_params(DeltaRule::Corrected), t, default_steps(t)).unwrap();
            let r2 = pvi_residual(&q, second.pvi_params(DeltaRule::Corrected), t, default_steps(t)).unwrap();
            println!("  m={m} t={t}: residuals {r1:.3e} / {r2:.3e}");
        }
    }

    println!("\nthe closed-form seed pair solves the Hamiltonian system at (b1, b2, -1/2, 0):");
    for t in ts {
        let (r1, r2) = check_hamiltonian_seed(0.3, 0.2, t).unwrap();
        println!("  t={t}: |dq/dt - dH/dp| = {r1:.3e}, |dp/dt + dH/dq| = {r2:.3e}");
    }

    println!("\nfourth-order stencil: halving the step divides the residual by ~16");
    let h = |tv: f64| eval_hnm(0, 1, 0.3, 1.0, tv, Chart::Quotient).unwrap();
    let b = BVector::new(0.3, 1.0, 1.5, 0.0);
    let mut prev: Option<f64> = None;
    for k in 0..4 {
        let step = 0.2 / (1u32 << k) as f64;
        let r = evi_residual_fd(&h, &b, 2.5, Bracket::Squared, (step, step)).unwrap();
        match prev {
            Some(p) => println!("  step {step:.4}: residual {r:.3e} (ratio {:.1})", p / r),
            None => println!("  step {step:.4}: residual {r:.3e}"),
        }
        prev = Some(r);
    }
}

use proptest::prelude::*;
use rydberg_core::quadrature::{integrate_adaptive, integrate_breakpoints, QuadConfig};
use rydberg_core::Strategy;

fn f(x: f64) -> f64 {
    (3.0 * x).sin() * (-0.3 * x).exp() + (x - 0.4).abs().sqrt()
}

proptest! {
    #[test]
    fn additivity(a in -3.0f64..0.0, c in 1.0f64..5.0, t in 0.01f64..0.99) {
        let tol = 1e-10;
        let b = a + t * (c - a);
        // the kink at 0.4 is announced, as the contract requires
        let cfg = QuadConfig::new(tol);
        let run = |lo: f64, hi: f64| {
            let pts: Vec<f64> = if lo < 0.4 && 0.4 < hi { vec![lo, 0.4, hi] } else { vec![lo, hi] };
            integrate_breakpoints(f, &pts, &cfg, Strategy::Sequential).value
        };
        let whole = run(a, c);
        let parts = run(a, b) + run(b, c);
        prop_assert!((whole - parts).abs() <= 2.0 * tol * whole.abs().max(1.0));
    }

    #[test]
    fn error_estimate_is_honest(k in 1u32..12, s in 0.05f64..3.0) {
        // ∫_0^1 x^{s−1}·x^k dx = 1/(s+k) has an endpoint singularity for s < 1
        let r = integrate_adaptive(|x: f64| x.powf(s - 1.0 + k as f64), 0.0, 1.0, 1e-9);
        let truth = 1.0 / (s + k as f64);
        prop_assert!((r.value - truth).abs() <= 10.0 * r.error_estimate.max(1e-16));
        if r.converged {
            prop_assert!(r.error_estimate <= 1e-9 * truth.max(1.0));
        }
    }

    #[test]
    fn strategies_agree(n in 2usize..40) {
        let pts: Vec<f64> = (0..=n).map(|i| i as f64 * 0.5).collect();
        let cfg = QuadConfig::new(1e-11);
        let a = integrate_breakpoints(f, &pts, &cfg, Strategy::Sequential).value;
        let b = integrate_breakpoints(f, &pts, &cfg, Strategy::Parallel).value;
        prop_assert!((a - b).abs() <= 1e-10 * a.abs().max(1.0));
    }
}

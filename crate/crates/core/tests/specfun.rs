use proptest::prelude::*;
use rydberg_core::specfun::{gegenbauer, laguerre_orthonormal, laguerre_zeros, Laguerre};

proptest! {
    #[test]
    fn gegenbauer_parity(k in 0usize..40, lam in 0.05f64..8.0, t in -1.0f64..1.0) {
        let a = gegenbauer(k, lam, t).unwrap();
        let b = gegenbauer(k, lam, -t).unwrap();
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!((a - sign * b).abs() <= 1e-12 * a.abs().max(1.0));
    }

    #[test]
    fn laguerre_sign_changes_equal_degree(n in 0usize..=200, alpha in 0.0f64..6.0) {
        let lag = Laguerre::new(n, alpha).unwrap();
        let end = 4.0 * n as f64 + 2.0 * alpha + 2.0;
        // quadratic grading: the small zeros crowd like 1/n near the origin
        let steps = 60 * (n + 1);
        let mut changes = 0;
        let mut prev = lag.ln_poly(1e-12).0;
        for i in 1..=steps {
            let u = i as f64 / steps as f64;
            let s = lag.ln_poly(end * u * u).0;
            if s != 0.0 && prev != 0.0 && s != prev {
                changes += 1;
            }
            if s != 0.0 {
                prev = s;
            }
        }
        prop_assert_eq!(changes, n);
    }

    #[test]
    fn zeros_are_roots(n in 1usize..80, alpha in 0.0f64..5.0) {
        for z in laguerre_zeros(n, alpha).unwrap() {
            // |L̂(z)| small relative to the size of L̂ nearby
            let v = laguerre_orthonormal(n, alpha, z).unwrap().abs();
            let h = 1e-3 * z.max(1e-3);
            let scale = laguerre_orthonormal(n, alpha, z + h).unwrap().abs();
            prop_assert!(v <= 1e-7 * scale.max(1e-300) + 1e-300);
        }
    }
}

//! Gegenbauer (ultraspherical) polynomials 𝒞ₖ^λ.

use super::roots::illinois;
use crate::error::{domain, Result};

/// 𝒞ₖ^λ(t) by the standard three-term recurrence.
///
/// λ = 0 follows the same recurrence and therefore gives zero for k ≥ 1.
pub fn gegenbauer(k: usize, lam: f64, t: f64) -> Result<f64> {
    if !(lam > -0.5) {
        return domain(format!("Gegenbauer parameter must satisfy λ > -1/2, got {lam}"));
    }
    if !(t.abs() <= 1.0) {
        return domain(format!("Gegenbauer argument must lie in [-1, 1], got {t}"));
    }
    Ok(eval(k, lam, t))
}

pub(crate) fn eval(k: usize, lam: f64, t: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * lam * t;
    for j in 1..k {
        let j = j as f64;
        let next = (2.0 * (j + lam) * t * cur - (j + 2.0 * lam - 1.0) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Zeros of 𝒞ₖ^λ expressed as angles θ ∈ (0, π) with t = cos θ, increasing.
pub fn gegenbauer_zero_angles(k: usize, lam: f64) -> Result<Vec<f64>> {
    if !(lam > 0.0) {
        return domain(format!("zeros need λ > 0, got {lam}"));
    }
    if k == 0 {
        return Ok(Vec::new());
    }
    let mut m = 16 * (k + 2);
    for _ in 0..8 {
        let g = |th: f64| eval(k, lam, th.cos());
        let mut out = Vec::with_capacity(k);
        let mut a = 0.0;
        let mut fa = g(a);
        for i in 1..=m {
            let b = std::f64::consts::PI * i as f64 / m as f64;
            let fb = g(b);
            if fb == 0.0 {
                out.push(b);
            } else if fa != 0.0 && fa.signum() != fb.signum() {
                out.push(illinois(g, a, b, fa, fb));
            }
            a = b;
            fa = fb;
        }
        if out.len() == k {
            return Ok(out);
        }
        m *= 2;
    }
    domain(format!("could not isolate the zeros of C_{k}^{lam}"))
}

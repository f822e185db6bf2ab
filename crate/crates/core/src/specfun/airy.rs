//! The Airy function Ai and its zeros.

use std::f64::consts::{FRAC_PI_4, PI};

use super::roots::illinois;

/// Ai(0) = 3^{-2/3}/Γ(2/3).
pub const AI0: f64 = 0.355_028_053_887_817_24;
/// −Ai'(0) = 3^{-1/3}/Γ(1/3).
pub const MINUS_AIP0: f64 = 0.258_819_403_792_806_8;

const MACLAURIN_LO: f64 = -7.0;
const MACLAURIN_HI: f64 = 5.0;

/// Ai(y) for real y.
///
/// Maclaurin series on [-7, 5], the exponentially decaying expansion beyond
/// 5 and the oscillatory expansion below -7.
pub fn airy_ai(y: f64) -> f64 {
    if y.is_nan() {
        return f64::NAN;
    }
    if y > MACLAURIN_HI {
        decaying(y)
    } else if y < MACLAURIN_LO {
        oscillating(-y)
    } else {
        maclaurin(y)
    }
}

fn maclaurin(y: f64) -> f64 {
    let y3 = y * y * y;
    let mut f = 1.0;
    let mut g = y;
    let mut tf = 1.0;
    let mut tg = y;
    let mut k = 1.0;
    loop {
        tf *= y3 / ((3.0 * k - 1.0) * (3.0 * k));
        tg *= y3 / ((3.0 * k) * (3.0 * k + 1.0));
        f += tf;
        g += tg;
        if tf.abs() < 1e-18 * f.abs().max(1.0) && tg.abs() < 1e-18 * g.abs().max(1.0) {
            break;
        }
        k += 1.0;
    }
    AI0 * f - MINUS_AIP0 * g
}

// u_k of the Airy asymptotic expansions
fn u_coeffs(n: usize) -> Vec<f64> {
    let mut u = vec![1.0; n];
    for k in 1..n {
        let kf = k as f64;
        u[k] = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / ((2.0 * kf - 1.0) * 216.0 * kf);
    }
    u
}

fn decaying(y: f64) -> f64 {
    let zeta = 2.0 / 3.0 * y.powf(1.5);
    let u = u_coeffs(40);
    let mut sum = 1.0;
    let mut last = f64::INFINITY;
    let mut zk = 1.0;
    for (k, uk) in u.iter().enumerate().skip(1) {
        zk *= zeta;
        let t = uk / zk;
        if t > last {
            break;
        }
        last = t;
        sum += if k % 2 == 0 { t } else { -t };
        if t < 1e-17 {
            break;
        }
    }
    (-zeta).exp() / (2.0 * PI.sqrt() * y.powf(0.25)) * sum
}

fn oscillating(x: f64) -> f64 {
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    let u = u_coeffs(60);
    let mut p = 1.0;
    let mut q = 0.0;
    let mut last = f64::INFINITY;
    let mut zk = 1.0;
    for (k, uk) in u.iter().enumerate().skip(1) {
        zk *= zeta;
        let t = uk / zk;
        if t > last {
            break;
        }
        last = t;
        // k even → P with sign (−1)^{k/2}; k odd → Q with sign (−1)^{(k−1)/2}
        match k % 4 {
            0 => p += t,
            1 => q += t,
            2 => p -= t,
            _ => q -= t,
        }
        if t < 1e-17 {
            break;
        }
    }
    let phase = zeta - FRAC_PI_4;
    (phase.cos() * p + phase.sin() * q) / (PI.sqrt() * x.powf(0.25))
}

/// The k-th zero magnitude a_k (Ai(−a_k) = 0), k ≥ 1.
pub fn airy_zero(k: usize) -> f64 {
    assert!(k >= 1, "zeros are numbered from 1");
    let t = 3.0 * PI * (4.0 * k as f64 - 1.0) / 8.0;
    let t2 = 1.0 / (t * t);
    let guess = t.powf(2.0 / 3.0)
        * (1.0 + t2 * (5.0 / 48.0 + t2 * (-5.0 / 36.0 + t2 * (77125.0 / 82944.0 - t2 * 108056875.0 / 6967296.0))));
    let g = |x: f64| airy_ai(-x);
    let mut h = 0.1 * PI / guess.sqrt();
    loop {
        let (a, b) = (guess - h, guess + h);
        let (fa, fb) = (g(a), g(b));
        if fa * fb <= 0.0 {
            return illinois(g, a, b, fa, fb);
        }
        h *= 1.5;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma::gamma_ln;

    #[test]
    fn value_at_origin() {
        let want = 3f64.powf(-2.0 / 3.0) / gamma_ln(2.0 / 3.0).unwrap().exp();
        assert!((airy_ai(0.0) - want).abs() < 1e-15);
    }

    #[test]
    fn reference_values() {
        // mpmath, 30 digits
        let cases = [
            (-50.0, -0.16188142361232092),
            (-20.0, -0.17640612707798468),
            (-7.5, 0.32177571638064788),
            (-7.0, 0.18428083525050564),
            (-2.0, 0.22740742820168558),
            (1.0, 0.13529241631288141),
            (4.99, 1.1084584219839809e-4),
            (5.01, 1.0589718813265608e-4),
            (10.0, 1.1047532552898687e-10),
            (20.0, 1.6916728686705403e-27),
        ];
        for (y, want) in cases {
            let got = airy_ai(y);
            assert!((got - want).abs() < 1e-11, "Ai({y}) = {got}, want {want}");
        }
    }

    #[test]
    fn decays_beyond_thirty() {
        assert!(airy_ai(30.0) > 0.0 && airy_ai(30.0) < 1e-20);
    }

    #[test]
    fn ode_residual() {
        let h = 1e-3;
        for y in [-5.0, 0.0, 2.0] {
            let d2 = (airy_ai(y + h) - 2.0 * airy_ai(y) + airy_ai(y - h)) / (h * h);
            assert!((d2 - y * airy_ai(y)).abs() < 1e-6, "y={y}");
        }
    }

    #[test]
    fn branches_join_continuously() {
        for y in [MACLAURIN_LO, MACLAURIN_HI] {
            let inner = maclaurin(y);
            let outer = if y > 0.0 { decaying(y) } else { oscillating(-y) };
            assert!((inner - outer).abs() < 1e-11, "y={y}: {inner} vs {outer}");
        }
    }

    #[test]
    fn zeros() {
        let known = [2.338107410459767, 4.087949444130971, 5.520559828095551];
        for (k, a) in known.iter().enumerate() {
            assert!((airy_zero(k + 1) - a).abs() < 1e-13);
        }
        assert!(airy_ai(-airy_zero(100)).abs() < 1e-13);
    }
}

//! Bessel functions of the first kind Jν(z) for real ν ≥ 0 and z ≥ 0.
//!
//! Branches:
//! - z ≤ 12: the ascending power series, summed in log form;
//! - z > 12: Hankel's asymptotic expansion when it reaches 1e-16;
//! - otherwise recurrence in the order, seeded with Hankel values at the
//!   fractional order (upward while ν < z, Miller's downward scheme beyond).

use std::f64::consts::{FRAC_PI_4, PI};

use super::gamma::gamma_ln;
use super::roots::illinois;
use crate::error::{domain, Result};

/// Below this argument the power series is used.
pub const SERIES_MAX_Z: f64 = 12.0;

/// Jν(z).
pub fn bessel_j(order: f64, z: f64) -> Result<f64> {
    let (s, l) = bessel_j_ln(order, z)?;
    Ok(if s == 0.0 { 0.0 } else { s * l.exp() })
}

/// Sign and ln|Jν(z)|. Useful when Jν(z) underflows (large ν, small z).
pub fn bessel_j_ln(order: f64, z: f64) -> Result<(f64, f64)> {
    if !(order >= 0.0) || !order.is_finite() {
        return domain(format!("Bessel order must be finite and >= 0, got {order}"));
    }
    if !(z >= 0.0) || !z.is_finite() {
        return domain(format!("Bessel argument must be finite and >= 0, got {z}"));
    }
    Ok(j_ln(order, z))
}

pub(crate) fn j_ln(nu: f64, z: f64) -> (f64, f64) {
    if z == 0.0 {
        return if nu == 0.0 { (1.0, 0.0) } else { (0.0, f64::NEG_INFINITY) };
    }
    if z <= SERIES_MAX_Z {
        return series_ln(nu, z);
    }
    if let Some(v) = hankel(nu, z, HANKEL_TOL) {
        return to_ln(v);
    }
    if z <= NEUMANN_MAX_Z {
        miller_neumann_ln(nu, z)
    } else if nu < z {
        upward_ln(nu, z)
    } else {
        miller_ln(nu, z)
    }
}

// Hankel's truncation error is about an eighth of its smallest term.
const HANKEL_TOL: f64 = 2e-11;
// beyond this the fractional-order Hankel seeds are always converged
const NEUMANN_MAX_Z: f64 = 30.0;

fn to_ln(v: f64) -> (f64, f64) {
    if v == 0.0 {
        (0.0, f64::NEG_INFINITY)
    } else {
        (v.signum(), v.abs().ln())
    }
}

/// Σ (−1)^k (z/2)^{2k+ν} / (k! Γ(k+ν+1)), returned as sign and log magnitude.
pub(crate) fn series_ln(nu: f64, z: f64) -> (f64, f64) {
    let ln_t0 = nu * (0.5 * z).ln() - gamma_ln(nu + 1.0).expect("ν + 1 > 0");
    let q = -0.25 * z * z;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        term *= q / (k * (k + nu));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() && k > 0.25 * z {
            break;
        }
        k += 1.0;
        if k > 500.0 {
            break;
        }
    }
    if sum == 0.0 {
        return (0.0, f64::NEG_INFINITY);
    }
    (sum.signum(), ln_t0 + sum.abs().ln())
}

/// Hankel's expansion, or `None` if its smallest term exceeds `tol`.
pub(crate) fn hankel(nu: f64, z: f64, tol: f64) -> Option<f64> {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut a = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        a *= (mu - odd * odd) / (k as f64 * 8.0 * z);
        let mag = a.abs();
        if mag > last {
            break;
        }
        last = mag;
        match k % 4 {
            1 => q += a,
            2 => p -= a,
            3 => q -= a,
            _ => p += a,
        }
        if mag < 1e-17 {
            break;
        }
    }
    if last >= tol {
        return None;
    }
    let chi = z - (0.5 * nu + 0.25) * PI;
    Some((2.0 / (PI * z)).sqrt() * (p * chi.cos() - q * chi.sin()))
}

fn seeds(nu: f64, z: f64) -> (f64, usize, f64, f64) {
    let mu = nu.fract();
    let steps = (nu - mu).round() as usize;
    let j0 = hankel(mu, z, HANKEL_TOL).expect("fractional order converges for z > 30");
    let j1 = hankel(mu + 1.0, z, HANKEL_TOL).expect("fractional order converges for z > 30");
    (mu, steps, j0, j1)
}

fn upward_ln(nu: f64, z: f64) -> (f64, f64) {
    let (mu, steps, mut prev, mut cur) = seeds(nu, z);
    if steps == 0 {
        return to_ln(prev);
    }
    for k in 1..steps {
        let next = 2.0 * (mu + k as f64) / z * cur - prev;
        prev = cur;
        cur = next;
    }
    to_ln(cur)
}

fn miller_ln(nu: f64, z: f64) -> (f64, f64) {
    let (mu, steps, j0, j1) = seeds(nu, z);
    let start = steps + 30 + (3.0 * (nu + z).sqrt()) as usize;
    let mut next = 0.0f64;
    let mut cur = 1e-300f64;
    let mut ln_scale = 0.0;
    let mut at_nu = (0.0, 0.0);
    let mut at_mu1 = (0.0, 0.0);
    if start == steps {
        at_nu = (cur, ln_scale);
    }
    // cur holds order mu + k
    for k in (1..=start).rev() {
        let prev = 2.0 * (mu + k as f64) / z * cur - next;
        next = cur;
        cur = prev;
        if k == 1 {
            at_mu1 = (next, ln_scale);
        }
        if k - 1 == steps {
            at_nu = (cur, ln_scale);
        }
        if k == steps + 1 && steps == start {
            at_nu = (next, ln_scale);
        }
        let m = cur.abs();
        if m > 1e250 {
            cur /= m;
            next /= m;
            ln_scale += m.ln();
        }
    }
    // normalise on whichever seed is further from a zero
    let (ln_ratio, sign_ratio) = if j0.abs() >= j1.abs() {
        (j0.abs().ln() - (cur.abs().ln() + ln_scale), j0.signum() * cur.signum())
    } else {
        let (v, s) = at_mu1;
        (j1.abs().ln() - (v.abs().ln() + s), j1.signum() * v.signum())
    };
    let (v, s) = at_nu;
    if v == 0.0 {
        return (0.0, f64::NEG_INFINITY);
    }
    (v.signum() * sign_ratio, v.abs().ln() + s + ln_ratio)
}

/// Miller's downward recurrence normalised by the Neumann series
/// Σₖ (μ+2k)Γ(μ+k)/k! J_{μ+2k}(z) = (z/2)^μ, with μ the fractional part of ν
/// (the k = 0 coefficient is Γ(μ+1)).
fn miller_neumann_ln(nu: f64, z: f64) -> (f64, f64) {
    let mu = nu.fract();
    let steps = (nu - mu).round() as usize;
    let top = nu.max(z).ceil() as usize + 40 + (3.0 * (nu + z).sqrt()) as usize;
    let top = top + (top % 2);
    let coeff = |k: usize| -> f64 {
        if k == 0 {
            gamma_ln(mu + 1.0).expect("μ + 1 > 0").exp()
        } else {
            let kf = k as f64;
            let lg = if mu == 0.0 { -kf.ln() } else { gamma_ln(mu + kf).expect("μ + k > 0") - gamma_ln(kf + 1.0).expect("k + 1 > 0") };
            (mu + 2.0 * kf) * lg.exp()
        }
    };
    let mut next = 0.0f64;
    let mut cur = 1e-300f64;
    let mut ln_scale = 0.0;
    let mut sum = if top.is_multiple_of(2) { coeff(top / 2) * cur } else { 0.0 };
    let mut at_nu = if top == steps { Some((cur, 0.0)) } else { None };
    // `cur` holds order μ + j
    for j in (1..=top).rev() {
        let prev = 2.0 * (mu + j as f64) / z * cur - next;
        next = cur;
        cur = prev;
        let order = j - 1;
        if order == steps {
            at_nu = Some((cur, ln_scale));
        }
        if order % 2 == 0 {
            sum += coeff(order / 2) * cur;
        }
        let m = cur.abs();
        if m > 1e250 {
            cur /= m;
            next /= m;
            sum /= m;
            ln_scale += m.ln();
        }
    }
    let (v, s) = at_nu.expect("ν lies below the starting order");
    if v == 0.0 || sum == 0.0 {
        return (0.0, f64::NEG_INFINITY);
    }
    let ln = v.abs().ln() + s - ln_scale + mu * (0.5 * z).ln() - sum.abs().ln();
    (v.signum() * sum.signum(), ln)
}

/// Lazily enumerated positive zeros j_{ν,1} < j_{ν,2} < … of Jν.
#[derive(Debug, Clone)]
pub struct BesselZeros {
    nu: f64,
    zeros: Vec<f64>,
    x: f64,
    fx: f64,
}

impl BesselZeros {
    pub fn new(nu: f64) -> Result<Self> {
        if !(nu >= 0.0) || !nu.is_finite() {
            return domain(format!("Bessel order must be finite and >= 0, got {nu}"));
        }
        // Jν is positive on (0, j_{ν,1}) and j_{ν,1} > ν
        let x = nu.max(0.5);
        Ok(Self { nu, zeros: Vec::new(), x, fx: value(nu, x) })
    }

    /// The k-th zero, k ≥ 1.
    pub fn get(&mut self, k: usize) -> f64 {
        assert!(k >= 1, "zeros are numbered from 1");
        while self.zeros.len() < k {
            let step = FRAC_PI_4 * 0.5;
            let b = self.x + step;
            let fb = value(self.nu, b);
            if fb == 0.0 {
                self.zeros.push(b);
            } else if self.fx.signum() != fb.signum() {
                let nu = self.nu;
                let r = illinois(|x| value(nu, x), self.x, b, self.fx, fb);
                self.zeros.push(r);
            }
            self.x = b;
            self.fx = fb;
        }
        self.zeros[k - 1]
    }
}

fn value(nu: f64, x: f64) -> f64 {
    let (s, l) = j_ln(nu, x);
    if s == 0.0 {
        0.0
    } else {
        // unit-scale proxy: only the sign and location matter
        s * (l + 0.5 * x.ln()).exp()
    }
}

/// √(2/(πz))·sin z, the closed form of J_{1/2}.
pub fn bessel_j_half(z: f64) -> f64 {
    (2.0 / (PI * z)).sqrt() * z.sin()
}

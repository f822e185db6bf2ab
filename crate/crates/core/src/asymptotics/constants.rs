//! Leading-term coefficients C(β,p), C_A(p) and C_B(α,β,p).

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::quadrature::{integrate, integrate_oscillatory_semiinfinite, LobeKind, OscillatorySpec, QuadConfig};
use crate::specfun::{airy_ai, airy_zero, bessel_j_ln, gamma_ln, gamma_ln_signed, BesselZeros};

use super::regime::BOUNDARY_TOL;

/// Relative accuracy requested from the integral constants.
const CONSTANT_TOL: f64 = 1e-9;
/// Accepted when the extrapolation cannot do better.
const CONSTANT_FLOOR: f64 = 1e-6;

fn near_pole(x: f64) -> bool {
    crate::specfun::gamma::near_gamma_pole(x, BOUNDARY_TOL)
}

/// Sign and ln|C(β,p)|.
pub fn constant_c_ln(beta: f64, p: f64) -> Result<(f64, f64)> {
    if !(p > 0.0) || !beta.is_finite() {
        return Err(Error::Domain(format!("C(β, p) needs p > 0 and finite β, got β={beta}, p={p}")));
    }
    let a = beta + 1.0 - p / 2.0;
    let b = 1.0 - p / 2.0;
    let d = beta + 2.0 - p;
    if near_pole(a) || near_pole(b) {
        return Err(Error::RegimeBoundary(format!(
            "C(β={beta}, p={p}) has a Gamma pole; the transition regime applies"
        )));
    }
    if near_pole(d) {
        return Err(Error::RegimeBoundary(format!(
            "C(β={beta}, p={p}) vanishes (1/Γ at a pole); outside the cosine law"
        )));
    }
    let (la, sa) = gamma_ln_signed(a);
    let (lb, sb) = gamma_ln_signed(b);
    let (ld, sd) = gamma_ln_signed(d);
    let ln = (beta + 1.0) * 2f64.ln() - (p + 0.5) * PI.ln() + la + lb + gamma_ln(p + 0.5)? - ld - gamma_ln(1.0 + p)?;
    Ok((sa * sb * sd, ln))
}

/// C(β,p) = 2^{β+1}/π^{p+1/2} · Γ(β+1−p/2)Γ(1−p/2)Γ(p+1/2) / (Γ(β+2−p)Γ(1+p)).
pub fn constant_c(beta: f64, p: f64) -> Result<f64> {
    let (s, l) = constant_c_ln(beta, p)?;
    Ok(s * l.exp())
}

/// Γ(p+1/2)/(√π Γ(p+1)), the period average of |cos|^{2p}.
pub fn cos_power_mean(p: f64) -> f64 {
    (libm::lgamma(p + 0.5) - 0.5 * PI.ln() - libm::lgamma(p + 1.0)).exp()
}

#[derive(Hash, PartialEq, Eq, Clone, Copy)]
enum Key {
    Airy(i64),
    Bessel(i64, i64, i64),
}

fn cache() -> &'static Mutex<HashMap<Key, f64>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, f64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn round_key(x: f64) -> i64 {
    (x * 1e12).round() as i64
}

fn memo(key: Key, compute: impl FnOnce() -> Result<f64>) -> Result<f64> {
    if let Some(&v) = cache().lock().expect("constant cache poisoned").get(&key) {
        return Ok(v);
    }
    let v = compute()?;
    cache().lock().expect("constant cache poisoned").insert(key, v);
    Ok(v)
}

fn accept(value: f64, error: f64) -> Result<f64> {
    if value.is_finite() && error <= CONSTANT_FLOOR * value.abs() {
        Ok(value)
    } else {
        Err(Error::NotConverged { value, error_estimate: error, tolerance: CONSTANT_FLOOR })
    }
}

/// C_A(p) = ∫_ℝ [(2π/∛2)·Ai²(−t∛2/2)]^p dt, finite for p > 2.
pub fn constant_ca(p: f64) -> Result<f64> {
    if !(p > 2.0) || !p.is_finite() {
        return Err(Error::Divergent(format!("C_A(p) needs p > 2 (tail decays like t^(-p/2)), got p = {p}")));
    }
    memo(Key::Airy(round_key(p)), || airy_integral(p, 64))
}

/// ∫_ℝ Ai(x)^{2p} dx, mapped back to C_A.
fn airy_integral(p: f64, lobes: usize) -> Result<f64> {
    let two_p = 2.0 * p;
    let f = |x: f64| airy_ai(x).abs().powf(two_p);
    let right = integrate(f, 0.0, f64::INFINITY, &QuadConfig::relative(1e-13));
    let spec = OscillatorySpec::new(|x: f64| airy_ai(-x).abs().powf(two_p), airy_zero, -p / 2.0)
        .lobes(LobeKind::Positive { mean_amplitude: Some(cos_power_mean(p) / PI.powf(p)) })
        .lobe_budget(lobes);
    let left = integrate_oscillatory_semiinfinite(spec, CONSTANT_TOL)?;
    let scale = 2f64.powf(2.0 / 3.0) * (2.0 * PI / 2f64.cbrt()).powf(p);
    accept(scale * (right.value + left.value), scale * (right.error_estimate + left.error_estimate))
}

/// Self-check hook: C_A(p) summed with an explicit lobe budget, uncached.
pub fn constant_ca_with_lobes(p: f64, lobes: usize) -> Result<f64> {
    if !(p > 2.0) {
        return Err(Error::Divergent(format!("C_A(p) needs p > 2, got p = {p}")));
    }
    airy_integral(p, lobes)
}

fn check_cb(alpha: f64, beta: f64, p: f64) -> Result<()> {
    if !(alpha >= 0.0) || !(p > 0.0) || !beta.is_finite() {
        return Err(Error::Domain(format!("C_B needs α ≥ 0, p > 0, finite β; got α={alpha}, β={beta}, p={p}")));
    }
    if !(2.0 * beta + 1.0 + 2.0 * p * alpha > -1.0) {
        return Err(Error::Divergent(format!(
            "C_B(α={alpha}, β={beta}, p={p}) diverges at the origin (needs 2β+1+2pα > −1)"
        )));
    }
    if !(p > 2.0 * beta + 2.0 + BOUNDARY_TOL) {
        return Err(Error::Divergent(format!(
            "C_B(α={alpha}, β={beta}, p={p}) diverges at infinity (needs p > 2β+2)"
        )));
    }
    Ok(())
}

/// ln C_B(α,β,p), where C_B = 2∫_0^∞ t^{2β+1}|J_α(2t)|^{2p} dt.
///
/// The integrand is rescaled by its peak so that orders in the hundreds,
/// where the value itself over- or underflows, stay representable.
pub fn constant_cb_ln(alpha: f64, beta: f64, p: f64) -> Result<f64> {
    check_cb(alpha, beta, p)?;
    memo(Key::Bessel(round_key(alpha), round_key(beta), round_key(p)), || bessel_integral_ln(alpha, beta, p, 64))
}

/// C_B(α,β,p); may overflow to ∞ for very large α, use [`constant_cb_ln`].
pub fn constant_cb(alpha: f64, beta: f64, p: f64) -> Result<f64> {
    constant_cb_ln(alpha, beta, p).map(f64::exp)
}

/// Self-check hook: ln C_B with an explicit lobe budget, uncached.
pub fn constant_cb_ln_with_lobes(alpha: f64, beta: f64, p: f64, lobes: usize) -> Result<f64> {
    check_cb(alpha, beta, p)?;
    bessel_integral_ln(alpha, beta, p, lobes)
}

fn bessel_integral_ln(alpha: f64, beta: f64, p: f64, lobes: usize) -> Result<f64> {
    let power = 2.0 * beta + 1.0;
    let ln_f = move |t: f64| -> f64 {
        if t <= 0.0 {
            return f64::NEG_INFINITY;
        }
        let (s, lj) = bessel_j_ln(alpha, 2.0 * t).unwrap_or((0.0, f64::NEG_INFINITY));
        if s == 0.0 {
            f64::NEG_INFINITY
        } else {
            power * t.ln() + 2.0 * p * lj
        }
    };
    let mut zeros = BesselZeros::new(alpha)?;
    // peak of the log-integrand over the first few lobes
    let first = zeros.get(1) / 2.0;
    let mut shift = f64::NEG_INFINITY;
    for i in 1..=400 {
        shift = shift.max(ln_f(first * i as f64 / 400.0));
    }
    for k in 1..8 {
        let (a, b) = (zeros.get(k) / 2.0, zeros.get(k + 1) / 2.0);
        for i in 1..20 {
            shift = shift.max(ln_f(a + (b - a) * i as f64 / 20.0));
        }
    }
    if !shift.is_finite() {
        return Err(Error::NotConverged { value: shift, error_estimate: f64::INFINITY, tolerance: CONSTANT_FLOOR });
    }
    let amplitude = cos_power_mean(p) / PI.powf(p) * (-shift).exp();
    let spec = OscillatorySpec::new(move |t: f64| (ln_f(t) - shift).exp(), move |k| zeros.get(k) / 2.0, power - p)
        .origin_exponent(power + 2.0 * p * alpha)
        .lobes(LobeKind::Positive { mean_amplitude: amplitude.is_finite().then_some(amplitude) })
        .lobe_budget(lobes);
    let r = integrate_oscillatory_semiinfinite(spec, CONSTANT_TOL)?;
    accept(r.value, r.error_estimate)?;
    Ok(2f64.ln() + shift + r.value.ln())
}

//! Angular parts: moments and Shannon entropy of |𝒴_{l,{μ}}|².

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use crate::error::{Error, Result};
use crate::hydrogenic::{HarmonicSpec, ThetaFactor};
use crate::quadrature::{integrate_power_endpoint, QuadConfig};
use crate::specfun::{gamma_ln, gegenbauer_zero_angles};

fn check_p(p: f64) -> Result<()> {
    if p > 0.0 && p.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("order p must be positive, got {p}")))
    }
}

fn check_dim(dim: u32) -> Result<()> {
    if dim < 2 {
        Err(Error::UnsupportedDimension(dim as f64))
    } else {
        Ok(())
    }
}

/// ln f(p,D) = (1−p)ln 2 + (D/2)(1−p)ln π + (p−1)ln Γ(D/2).
pub fn ln_f_closed_form(p: f64, dim: u32) -> Result<f64> {
    check_p(p)?;
    check_dim(dim)?;
    let d = dim as f64;
    Ok((1.0 - p) * LN_2 + 0.5 * d * (1.0 - p) * PI.ln() + (p - 1.0) * gamma_ln(0.5 * d)?)
}

/// f(p,D) = ∫|𝒴_{0,0}|^{2p} dΩ = 2^{1−p}π^{(D/2)(1−p)}Γ(D/2)^{p−1}.
pub fn f_closed_form(p: f64, dim: u32) -> Result<f64> {
    ln_f_closed_form(p, dim).map(f64::exp)
}

/// ln of the equivalent form 2^{D(1−p)}π^{(−Dp+D+p−1)/2}[Γ(D)/Γ((D+1)/2)]^{p−1}.
pub fn ln_f_closed_form_body(p: f64, dim: u32) -> Result<f64> {
    check_p(p)?;
    check_dim(dim)?;
    let d = dim as f64;
    Ok(d * (1.0 - p) * LN_2
        + 0.5 * (-d * p + d + p - 1.0) * PI.ln()
        + (p - 1.0) * (gamma_ln(d)? - gamma_ln(0.5 * (d + 1.0))?))
}

pub fn f_closed_form_body(p: f64, dim: u32) -> Result<f64> {
    ln_f_closed_form_body(p, dim).map(f64::exp)
}

/// S[𝒴_{0,0}] = −ln 𝒩²_{0,0} = D ln 2 + ((D−1)/2)ln π + ln[Γ((D+1)/2)/Γ(D)].
pub fn shannon_y00(dim: u32) -> Result<f64> {
    check_dim(dim)?;
    let d = dim as f64;
    Ok(d * LN_2 + 0.5 * (d - 1.0) * PI.ln() + gamma_ln(0.5 * (d + 1.0))? - gamma_ln(d)?)
}

/// ∫_0^π g(θ) dθ for g symmetric about π/2, vanishing like a power at the
/// Gegenbauer zeros and like θ^{origin} at 0.
fn symmetric_integral(g: &dyn Fn(f64) -> f64, factor: &ThetaFactor, origin: f64, zero_power: f64, tol: f64) -> Result<(f64, f64)> {
    let zeros = gegenbauer_zero_angles(factor.degree, factor.lambda)?;
    let mut points = vec![0.0];
    points.extend(zeros.iter().copied().filter(|&z| z < FRAC_PI_2 - 1e-12));
    let odd = factor.degree % 2 == 1;
    points.push(FRAC_PI_2);
    let cfg = QuadConfig::relative(tol).with_max_subintervals(2000);
    let mut value = 0.0;
    let mut error = 0.0;
    for w in points.windows(2) {
        let (a, b) = (w[0], w[1]);
        let mid = 0.5 * (a + b);
        let left_power = if a == 0.0 { origin } else { zero_power };
        let l = integrate_power_endpoint(g, a, mid, left_power, &cfg);
        let right_is_zero = b < FRAC_PI_2 || odd;
        let r = if right_is_zero {
            integrate_power_endpoint(|u: f64| g(b - u), 0.0, b - mid, zero_power, &cfg)
        } else {
            integrate_power_endpoint(g, mid, b, 0.0, &cfg)
        };
        value += l.value + r.value;
        error += l.error_estimate + r.error_estimate;
    }
    Ok((2.0 * value, 2.0 * error))
}

/// ln ∫_0^π |C(cos θ) sin^μ θ|^{2p} sin^{2α}θ dθ for one θ factor.
fn ln_factor_moment(f: &ThetaFactor, p: f64, tol: f64) -> Result<f64> {
    let two_p = 2.0 * p;
    let w = f.weight_power;
    let g = move |th: f64| -> f64 {
        let s = th.sin();
        let v = f.value(th).abs();
        if v == 0.0 || s == 0.0 {
            0.0
        } else {
            (two_p * v.ln() + w * s.ln()).exp()
        }
    };
    let origin = two_p * f.sin_power as f64 + w;
    let (v, e) = symmetric_integral(&g, f, origin, two_p, tol)?;
    if !(v > 0.0) || e > tol.max(1e-12) * v * 10.0 {
        return Err(Error::NotConverged { value: v, error_estimate: e, tolerance: tol });
    }
    Ok(v.ln())
}

/// ln Λ, where Λ = ∫|𝒴_{l,{μ}}|^{2p} dΩ.
pub fn angular_moment_ln(spec: &HarmonicSpec, p: f64, tol: f64) -> Result<f64> {
    check_p(p)?;
    let spec = HarmonicSpec::new(spec.dim, spec.l, spec.mu.clone())?;
    let mut total = p * spec.ln_norm_sq() + (2.0 * PI).ln();
    for f in spec.theta_factors() {
        total += ln_factor_moment(&f, p, tol)?;
    }
    Ok(total)
}

/// Λ = 𝒩^{2p}·2π·∏ⱼ∫|𝒞ⱼ sin^{μⱼ₊₁}θ|^{2p} sin^{2αⱼ}θ dθ, by quadrature over
/// the intervals between Gegenbauer zeros.
pub fn angular_moment(spec: &HarmonicSpec, p: f64, tol: f64) -> Result<f64> {
    angular_moment_ln(spec, p, tol).map(f64::exp)
}

/// ln Λ, by the closed form when l = 0 and by quadrature otherwise.
pub fn angular_moment_ln_fast(spec: &HarmonicSpec, p: f64, tol: f64) -> Result<f64> {
    if spec.l == 0 {
        ln_f_closed_form(p, spec.dim)
    } else {
        angular_moment_ln(spec, p, tol)
    }
}

/// S[𝒴] = −∫|𝒴|² ln|𝒴|² dΩ. Closed form for l = 0, otherwise one entropy
/// quadrature per θ factor.
pub fn shannon_angular(spec: &HarmonicSpec, tol: f64) -> Result<f64> {
    let spec = HarmonicSpec::new(spec.dim, spec.l, spec.mu.clone())?;
    if spec.l == 0 {
        return shannon_y00(spec.dim);
    }
    let mut s = -spec.ln_norm_sq();
    for f in spec.theta_factors() {
        let w = f.weight_power;
        let mass = move |th: f64| {
            let v = f.value(th);
            v * v * th.sin().powf(w)
        };
        let ent = move |th: f64| {
            let v = f.value(th);
            let m = v * v * th.sin().powf(w);
            if m == 0.0 {
                0.0
            } else {
                m * (v * v).ln()
            }
        };
        let origin = 2.0 * f.sin_power as f64 + w;
        let (i, _) = symmetric_integral(&mass, &f, origin, 2.0, tol)?;
        let (h, _) = symmetric_integral(&ent, &f, origin, 2.0, tol)?;
        s -= h / i;
    }
    Ok(s)
}

//! Radial parts: entropic moments, Rényi and Shannon entropies of ρ_{n,l}.

use std::f64::consts::{LN_2, PI};

use serde::{Deserialize, Serialize};

use crate::asymptotics::{asymptotic_norm, AsymptoticEstimate};
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::hydrogenic::QuantumState;
use crate::norms::{hydrogenic_norm_ln, DEFAULT_TOL};
use crate::quadrature::{integrate, integrate_breakpoints, QuadConfig};
use crate::specfun::Laguerre;

/// How the Laguerre norm N_{n,l}(D, p) is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// Adaptive quadrature.
    #[default]
    Exact,
    /// Leading large-n term.
    Asymptotic,
}

impl Backend {
    pub fn label(self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Asymptotic => "asymptotic",
        }
    }
}

/// Quadrature settings shared by the entropy routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyConfig {
    pub tol: f64,
    pub strategy: Strategy,
}

impl Default for EntropyConfig {
    fn default() -> Self {
        Self { tol: DEFAULT_TOL, strategy: Strategy::default() }
    }
}

/// ln W_p[ρ_{n,l}] and where it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialMoment {
    pub ln_w: f64,
    /// Relative error of W_p; `None` for the asymptotic backend.
    pub relative_error: Option<f64>,
    pub estimate: Option<AsymptoticEstimate>,
}

/// ln[η^{D(1−p)−p} / (2^{D(1−p)+p} Z^{D(1−p)})], the factor that turns
/// N_{n,l}(D,p) into ∫ρ^p r^{D−1} dr.
pub fn ln_radial_prefactor(state: &QuantumState, p: f64) -> f64 {
    let d = state.dim as f64;
    let q = d * (1.0 - p);
    (q - p) * state.eta().ln() - (q + p) * LN_2 - q * state.z.ln()
}

pub fn radial_moment_ln(state: &QuantumState, p: f64, backend: Backend, cfg: &EntropyConfig) -> Result<RadialMoment> {
    state.validate()?;
    let pre = ln_radial_prefactor(state, p);
    match backend {
        Backend::Exact => {
            let n = hydrogenic_norm_ln(state, p, cfg.tol, cfg.strategy)?.check()?;
            Ok(RadialMoment { ln_w: pre + n.ln_value, relative_error: Some(n.relative_error), estimate: None })
        }
        Backend::Asymptotic => {
            let e = asymptotic_norm(state, p)?;
            Ok(RadialMoment { ln_w: pre + e.ln_value, relative_error: None, estimate: Some(e) })
        }
    }
}

/// R_p[ρ_{n,l}] = ln W_p / (1−p).
pub fn renyi_radial(state: &QuantumState, p: f64, backend: Backend) -> Result<f64> {
    renyi_radial_with(state, p, backend, &EntropyConfig::default())
}

pub fn renyi_radial_with(state: &QuantumState, p: f64, backend: Backend, cfg: &EntropyConfig) -> Result<f64> {
    if p == 1.0 {
        return Err(Error::ShannonLimit);
    }
    Ok(radial_moment_ln(state, p, backend, cfg)?.ln_w / (1.0 - p))
}

/// −∫ρ ln ρ r^{D−1} dr by direct quadrature.
///
/// With x = r/λ and φ = L̂_{n_r}^{(α)}(x)x^{α/2}e^{−x/2}:
/// S = D ln λ + ln 2η − (1/2η)∫xφ²[ln φ² + (2−D)ln x]dx.
pub fn shannon_radial_exact(state: &QuantumState, tol: f64) -> Result<f64> {
    shannon_radial_exact_with(state, &EntropyConfig { tol, ..EntropyConfig::default() })
}

pub fn shannon_radial_exact_with(state: &QuantumState, cfg: &EntropyConfig) -> Result<f64> {
    state.validate()?;
    let d = state.dim as f64;
    let lag = Laguerre::new(state.n_r(), state.alpha())?;
    let f = |x: f64| -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        let (s, lw) = lag.ln_weighted(x);
        if s == 0.0 {
            return 0.0;
        }
        let ln_phi2 = 2.0 * lw;
        x * ln_phi2.exp() * (ln_phi2 + (2.0 - d) * x.ln())
    };
    let mut points = vec![0.0];
    points.extend(lag.zeros()?);
    // one more span past the outermost zero before switching to the map to ∞
    let last = *points.last().expect("non-empty");
    let tail_start = last + 4.0 * (1.0 + last.sqrt());
    points.push(tail_start);
    let qc = QuadConfig::new(cfg.tol * 1e-2).with_max_subintervals(20_000);
    let body = integrate_breakpoints(f, &points, &qc, cfg.strategy);
    let tail = integrate(f, tail_start, f64::INFINITY, &qc);
    let j = body.value + tail.value;
    let err = body.error_estimate + tail.error_estimate;
    let two_eta = 2.0 * state.eta();
    let s = d * state.lambda_scale().ln() + two_eta.ln() - j / two_eta;
    if !s.is_finite() || err / two_eta > cfg.tol * s.abs().max(1.0) {
        return Err(Error::NotConverged { value: s, error_estimate: err / two_eta, tolerance: cfg.tol });
    }
    Ok(s)
}

/// Large-n radial Shannon entropy 2D ln n + (2−D)ln 2 + ln π − D ln Z + D − 3,
/// valid for n ≫ l.
pub fn shannon_radial_limit(state: &QuantumState) -> f64 {
    let d = state.dim as f64;
    2.0 * d * (state.n as f64).ln() + (2.0 - d) * LN_2 + PI.ln() - d * state.z.ln() + d - 3.0
}

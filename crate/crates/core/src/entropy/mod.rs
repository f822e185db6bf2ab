//! Entropic moments and the Rényi, Shannon and Tsallis entropies of
//! hydrogenic states, split into radial and angular parts.

pub mod angular;
pub mod radial;

use serde::{Deserialize, Serialize};

use crate::asymptotics::RegimeClass;
use crate::error::{Error, Result};
use crate::exec;
use crate::hydrogenic::QuantumState;

pub use angular::{
    angular_moment, angular_moment_ln, angular_moment_ln_fast, f_closed_form, f_closed_form_body, ln_f_closed_form,
    ln_f_closed_form_body, shannon_angular, shannon_y00,
};
pub use radial::{
    ln_radial_prefactor, radial_moment_ln, renyi_radial, renyi_radial_with, shannon_radial_exact,
    shannon_radial_exact_with, shannon_radial_limit, Backend, EntropyConfig, RadialMoment,
};

/// Entropies of one state at one order p.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropyReport {
    /// W_p = ∫ρ^p d^Dr; 1 at p = 1.
    pub w_p: f64,
    pub ln_w_p: f64,
    pub r_p: f64,
    pub t_p: f64,
    /// Shannon entropy, filled on the p = 1 branch.
    pub s: Option<f64>,
    /// W₂, filled when p = 2.
    pub disequilibrium: Option<f64>,
    pub radial_r_p: f64,
    pub angular_r_p: f64,
    pub method: Backend,
    pub regime: Option<RegimeClass>,
    pub p: f64,
    pub state: QuantumState,
    /// Absolute error bound on R_p; absent for the asymptotic backend.
    pub error_estimate: Option<f64>,
    /// The asymptotic value omits an unspecified O(1) term next to a ln n.
    pub offset_unknown: bool,
}

impl EntropyReport {
    /// The same report for charge `z`. The radial density only rescales with
    /// Z, so R_p shifts by −D ln(Z/Z₀) and nothing has to be recomputed.
    pub fn translated_to_z(&self, z: f64) -> Result<EntropyReport> {
        let state = self.state.with_z(z)?;
        let d = self.state.dim as f64;
        let shift = d * (z / self.state.z).ln();
        let mut out = self.clone();
        out.state = state;
        out.r_p -= shift;
        out.radial_r_p -= shift;
        out.s = self.s.map(|s| s - shift);
        if self.p == 1.0 {
            out.t_p = out.r_p;
        } else {
            out.ln_w_p += (1.0 - self.p) * shift;
            out.w_p = out.ln_w_p.exp();
            out.t_p = tsallis_from_renyi(out.r_p, self.p)?;
            out.disequilibrium = self.disequilibrium.map(|_| out.w_p);
        }
        Ok(out)
    }
}

/// T_p = [e^{(1−p)R_p} − 1]/(1−p).
pub fn tsallis_from_renyi(r_p: f64, p: f64) -> Result<f64> {
    if p == 1.0 {
        return Err(Error::ShannonLimit);
    }
    let q = 1.0 - p;
    Ok((q * r_p).exp_m1() / q)
}

/// Rényi entropy of the full density, R_p[ρ] + R_p[𝒴], for p ≠ 1.
pub fn renyi_total(state: &QuantumState, p: f64, backend: Backend) -> Result<EntropyReport> {
    renyi_total_with(state, p, backend, &EntropyConfig::default())
}

pub fn renyi_total_with(state: &QuantumState, p: f64, backend: Backend, cfg: &EntropyConfig) -> Result<EntropyReport> {
    if p == 1.0 {
        return Err(Error::ShannonLimit);
    }
    let radial = radial_moment_ln(state, p, backend, cfg)?;
    let ln_ang = angular_moment_ln_fast(&state.harmonic(), p, cfg.tol * 1e-3)?;
    let ln_w = radial.ln_w + ln_ang;
    let q = 1.0 - p;
    let r_p = ln_w / q;
    let estimate = radial.estimate.as_ref();
    Ok(EntropyReport {
        w_p: ln_w.exp(),
        ln_w_p: ln_w,
        r_p,
        t_p: tsallis_from_renyi(r_p, p)?,
        s: None,
        disequilibrium: (p == 2.0).then(|| ln_w.exp()),
        radial_r_p: radial.ln_w / q,
        angular_r_p: ln_ang / q,
        method: backend,
        regime: estimate.map(|e| *e.regime()),
        p,
        state: state.clone(),
        error_estimate: radial.relative_error.map(|e| (e + cfg.tol * 1e-3) / q.abs()),
        offset_unknown: estimate.is_some_and(|e| e.offset_unknown()),
    })
}

/// S[ρ] + S[𝒴] by direct quadrature, packaged as the p = 1 report.
pub fn shannon_total(state: &QuantumState, cfg: &EntropyConfig) -> Result<EntropyReport> {
    let radial = shannon_radial_exact_with(state, cfg)?;
    let angular = shannon_angular(&state.harmonic(), cfg.tol * 1e-3)?;
    Ok(shannon_report(state, radial, angular, Backend::Exact, Some(cfg.tol * (radial.abs().max(1.0)))))
}

/// Large-n Shannon entropy: radial limit plus S[𝒴]; meant for n ≫ l.
pub fn shannon_limit_formula(state: &QuantumState) -> Result<f64> {
    state.validate()?;
    Ok(shannon_radial_limit(state) + shannon_angular(&state.harmonic(), 1e-12)?)
}

fn shannon_report(state: &QuantumState, radial: f64, angular: f64, method: Backend, error: Option<f64>) -> EntropyReport {
    let s = radial + angular;
    EntropyReport {
        w_p: 1.0,
        ln_w_p: 0.0,
        r_p: s,
        t_p: s,
        s: Some(s),
        disequilibrium: None,
        radial_r_p: radial,
        angular_r_p: angular,
        method,
        regime: None,
        p: 1.0,
        state: state.clone(),
        error_estimate: error,
        offset_unknown: false,
    }
}

/// Report at any p > 0; p = 1 takes the Shannon branch.
pub fn entropy_report(state: &QuantumState, p: f64, backend: Backend, cfg: &EntropyConfig) -> Result<EntropyReport> {
    if p != 1.0 {
        return renyi_total_with(state, p, backend, cfg);
    }
    match backend {
        Backend::Exact => shannon_total(state, cfg),
        Backend::Asymptotic => {
            state.validate()?;
            let angular = shannon_angular(&state.harmonic(), 1e-12)?;
            Ok(shannon_report(state, shannon_radial_limit(state), angular, Backend::Asymptotic, None))
        }
    }
}

/// Reports for many (state, p) points, in parallel when the strategy allows.
pub fn entropy_sweep(points: &[(QuantumState, f64)], backend: Backend, cfg: &EntropyConfig) -> Vec<Result<EntropyReport>> {
    // points already run concurrently; keep each norm on one thread
    let inner = EntropyConfig { strategy: exec::Strategy::Sequential, ..*cfg };
    exec::map(cfg.strategy, points, |(state, p)| entropy_report(state, *p, backend, &inner))
}

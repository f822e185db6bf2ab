//! Semi-infinite integrals of slowly decaying oscillatory integrands.
//!
//! [0, ∞) is cut at the zeros of the oscillation, every lobe is integrated
//! adaptively, and the sequence of partial sums is extrapolated:
//!
//! - lobes of one sign (|f|^{2p}-type integrands) leave a smooth remainder
//!   R(K) ≈ z_K^γ·Σⱼ bⱼK^{−j}, γ = s+1, which is fitted by least squares over
//!   the last half of the lobes. When the mean amplitude A of f ≈ A·t^s is
//!   known, the leading tail A·z^γ/(−γ) is removed analytically first, which
//!   keeps the fit well conditioned even for γ close to 0;
//! - alternating lobes are summed by iterated averaging of partial sums.

use nalgebra::{DMatrix, DVector};

use super::adaptive::{integrate, integrate_power_endpoint, IntegrationResult, QuadConfig};
use crate::error::{Error, Result};

/// Sign pattern of consecutive lobes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LobeKind {
    /// All lobes share one sign. `mean_amplitude` is A in f(t) ≈ A·t^s on
    /// average over a period, if known.
    Positive { mean_amplitude: Option<f64> },
    /// Lobe signs alternate, as for ∫Jν.
    Alternating,
}

/// Description of an integral ∫_start^∞ f(t) dt.
pub struct OscillatorySpec<'a> {
    pub integrand: Box<dyn Fn(f64) -> f64 + 'a>,
    /// k ↦ k-th zero after `start` (k ≥ 1), increasing in k.
    pub zero_locator: Box<dyn FnMut(usize) -> f64 + 'a>,
    /// s in |f(t)| ≈ t^s (for alternating lobes: the envelope of f).
    pub algebraic_decay_exponent: f64,
    pub start: f64,
    /// Power behaviour f(t) ~ (t−start)^e at the lower limit, if singular.
    pub origin_exponent: Option<f64>,
    pub lobes: LobeKind,
    /// Lobes summed before extrapolation; doubled (up to 8×) if the error
    /// estimate misses the tolerance.
    pub lobe_budget: usize,
}

impl<'a> OscillatorySpec<'a> {
    pub fn new(
        integrand: impl Fn(f64) -> f64 + 'a,
        zero_locator: impl FnMut(usize) -> f64 + 'a,
        algebraic_decay_exponent: f64,
    ) -> Self {
        Self {
            integrand: Box::new(integrand),
            zero_locator: Box::new(zero_locator),
            algebraic_decay_exponent,
            start: 0.0,
            origin_exponent: None,
            lobes: LobeKind::Positive { mean_amplitude: None },
            lobe_budget: 64,
        }
    }

    pub fn lobes(mut self, lobes: LobeKind) -> Self {
        self.lobes = lobes;
        self
    }

    pub fn origin_exponent(mut self, e: f64) -> Self {
        self.origin_exponent = Some(e);
        self
    }

    pub fn lobe_budget(mut self, n: usize) -> Self {
        self.lobe_budget = n;
        self
    }

    pub fn start(mut self, t0: f64) -> Self {
        self.start = t0;
        self
    }
}

const FIT_TERMS: usize = 4;
const MAX_DOUBLINGS: usize = 3;

/// ∫_start^∞ f(t) dt with lobe summation and extrapolation; `tol` is relative.
pub fn integrate_oscillatory_semiinfinite(mut spec: OscillatorySpec<'_>, tol: f64) -> Result<IntegrationResult> {
    let s = spec.algebraic_decay_exponent;
    match spec.lobes {
        LobeKind::Positive { .. } if !(s < -1.0) => {
            return Err(Error::Divergent(format!(
                "same-sign lobes decaying like t^{s} are not integrable (need exponent < -1)"
            )))
        }
        LobeKind::Alternating if !(s < 0.0) => {
            return Err(Error::Divergent(format!(
                "alternating lobes with envelope t^{s} do not shrink (need exponent < 0)"
            )))
        }
        _ => {}
    }
    let lobe_cfg = QuadConfig::relative(1e-14).with_max_subintervals(400);
    let mut zeros: Vec<f64> = vec![spec.start];
    let mut lobes: Vec<IntegrationResult> = Vec::new();
    let mut budget = spec.lobe_budget.max(16);
    let mut best: Option<IntegrationResult> = None;
    for round in 0..=MAX_DOUBLINGS {
        while lobes.len() < budget {
            let k = lobes.len() + 1;
            let z = (spec.zero_locator)(k);
            let a = zeros[k - 1];
            let r = match (k, spec.origin_exponent) {
                (1, Some(e)) => integrate_power_endpoint(&spec.integrand, a, z, e, &lobe_cfg),
                _ => integrate(&spec.integrand, a, z, &lobe_cfg),
            };
            zeros.push(z);
            lobes.push(r);
        }
        let mut partial = Vec::with_capacity(budget);
        let mut acc = 0.0;
        for l in &lobes {
            acc += l.value;
            partial.push(acc);
        }
        let quad_err: f64 = lobes.iter().map(|l| l.error_estimate).sum();
        let used: usize = lobes.iter().map(|l| l.subintervals_used).sum();
        let (value, extrap_err) = match spec.lobes {
            LobeKind::Positive { mean_amplitude } => extrapolate_positive(&partial, &zeros[1..], s + 1.0, mean_amplitude),
            LobeKind::Alternating => iterated_average(&partial),
        };
        let error = extrap_err + quad_err;
        let result = IntegrationResult {
            value,
            error_estimate: error,
            subintervals_used: used,
            converged: error <= tol * value.abs() && value.is_finite(),
        };
        let better = best.is_none_or(|b| result.error_estimate < b.error_estimate);
        if better {
            best = Some(result);
        }
        if result.converged || round == MAX_DOUBLINGS {
            break;
        }
        budget *= 2;
    }
    Ok(best.expect("at least one round"))
}

/// Extrapolated value and error estimate for same-sign lobes.
fn extrapolate_positive(partial: &[f64], zeros: &[f64], gamma: f64, amplitude: Option<f64>) -> (f64, f64) {
    let l = partial.len();
    let last = partial[l - 1];
    let recent: f64 = partial[l - 1] - partial[l - 4];
    if recent.abs() <= 1e-17 * last.abs() {
        return (last, recent.abs());
    }
    let lo = l / 2;
    let zl = zeros[l - 1];
    let rows: Vec<usize> = (lo..l).collect();
    let first_j = if amplitude.is_some() { 1 } else { 0 };
    let y: Vec<f64> = rows
        .iter()
        .map(|&i| {
            let tail = amplitude.map_or(0.0, |a| a * zeros[i].powf(gamma) / (-gamma));
            partial[i] + tail
        })
        .collect();
    let fit = |m: usize| -> f64 {
        let cols = 1 + (m + 1 - first_j);
        let mut a = DMatrix::<f64>::zeros(rows.len(), cols);
        for (r, &i) in rows.iter().enumerate() {
            let k = (i + 1) as f64 / l as f64;
            let zpow = (zeros[i] / zl).powf(gamma);
            a[(r, 0)] = 1.0;
            for (c, j) in (first_j..=m).enumerate() {
                a[(r, c + 1)] = zpow * k.powi(-(j as i32));
            }
        }
        let b = DVector::from_column_slice(&y);
        let svd = a.svd(true, true);
        svd.solve(&b, 1e-15).map(|x| x[0]).unwrap_or(f64::NAN)
    };
    let hi = fit(FIT_TERMS);
    let lo_fit = fit(FIT_TERMS - 1);
    if !hi.is_finite() {
        return (last, f64::INFINITY);
    }
    (hi, (hi - lo_fit).abs())
}

/// Repeated pairwise averaging of the last partial sums.
fn iterated_average(partial: &[f64]) -> (f64, f64) {
    let l = partial.len();
    let depth = (l - 1).min(24);
    let run = |window: &[f64]| -> f64 {
        let mut v = window.to_vec();
        while v.len() > 1 {
            v = v.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
        }
        v[0]
    };
    let full = run(&partial[l - 1 - depth..]);
    let shorter = run(&partial[l - depth..]);
    let shifted = run(&partial[l - 2 - depth + 1..l - 1]);
    (full, (full - shorter).abs().max((full - shifted).abs()))
}

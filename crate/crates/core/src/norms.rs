//! Exact Laguerre L_p-norm functionals
//! N_n(α, p, β) = ∫₀^∞ ([L̂ₙ^(α)(x)]² x^α e^{−x})^p x^β dx
//! and their hydrogenic specialisation.
//!
//! The integrand is evaluated in log form and shifted by its peak, so the
//! quadrature always sees O(1) values; the shift is added back to the log of
//! the result. Panels are delimited by the polynomial zeros (cusps of the
//! p-th power), the first panel gets a power map for the x^{pα+β} behaviour
//! at the origin, and the tail is followed until the integrand has dropped
//! e^{−50} below its peak, the remainder being bounded by an exponential
//! envelope.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::exec::Strategy;
use crate::hydrogenic::QuantumState;
use crate::quadrature::adaptive::power_exponent;
use crate::quadrature::{integrate_breakpoints, IntegrationResult, QuadConfig};
use crate::specfun::Laguerre;

/// Default relative tolerance of exact norms.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Tolerance used as a fallback above [`LARGE_DEGREE`].
pub const FALLBACK_TOL: f64 = 1e-7;
pub const LARGE_DEGREE: usize = 500;

const TAIL_DROP: f64 = 50.0;

/// The triple (α, p, β) and the polynomial degree.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormParams {
    pub alpha: f64,
    pub p: f64,
    pub beta: f64,
    pub degree: usize,
}

impl NormParams {
    pub fn new(alpha: f64, p: f64, beta: f64, degree: usize) -> Result<Self> {
        let params = Self { alpha, p, beta, degree };
        params.validate()?;
        Ok(params)
    }

    /// α = 2l+D−2, β = (2−D)p + D − 1, degree n − l − 1.
    pub fn hydrogenic(state: &QuantumState, p: f64) -> Result<Self> {
        state.validate()?;
        let d = state.dim as f64;
        Self::new(state.alpha(), p, (2.0 - d) * p + d - 1.0, state.n_r())
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > -1.0) || !self.alpha.is_finite() {
            return domain(format!("need α > -1, got {}", self.alpha));
        }
        if !(self.p > 0.0) || !self.p.is_finite() {
            return domain(format!("need p > 0, got {}", self.p));
        }
        if !self.beta.is_finite() {
            return domain("β must be finite");
        }
        if !(self.beta + self.p * self.alpha > -1.0) {
            return Err(Error::Divergent(format!(
                "β + pα = {} ≤ -1: the norm integral diverges at the origin",
                self.beta + self.p * self.alpha
            )));
        }
        Ok(())
    }

    /// Exponent of the x^{pα+β} behaviour at the origin.
    pub fn origin_exponent(&self) -> f64 {
        self.p * self.alpha + self.beta
    }

    /// Closed form for degree 0: Γ(pα+β+1)/(Γ(α+1)^p p^{pα+β+1}), as a log.
    pub fn ln_degree_zero(&self) -> f64 {
        let s = self.origin_exponent();
        crate::specfun::gamma_ln(s + 1.0).expect("s > -1") - self.p * crate::specfun::gamma_ln(self.alpha + 1.0).expect("α > -1")
            - (s + 1.0) * self.p.ln()
    }
}

/// A norm value carried as a logarithm, for values beyond double range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormValue {
    pub ln_value: f64,
    pub relative_error: f64,
    pub subintervals_used: usize,
    pub converged: bool,
    /// Relative tolerance that was finally applied.
    pub tolerance: f64,
}

impl NormValue {
    pub fn value(&self) -> f64 {
        self.ln_value.exp()
    }

    pub fn to_integration_result(&self) -> IntegrationResult {
        let v = self.value();
        IntegrationResult {
            value: v,
            error_estimate: self.relative_error * v,
            subintervals_used: self.subintervals_used,
            converged: self.converged,
        }
    }

    pub fn check(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::NotConverged {
                value: self.value(),
                error_estimate: self.relative_error * self.value(),
                tolerance: self.tolerance * self.value(),
            })
        }
    }
}

/// N_n(α, p, β) with relative tolerance `tol`, splitting at the zeros.
pub fn exact_norm(params: &NormParams, tol: f64) -> Result<IntegrationResult> {
    Ok(exact_norm_ln(params, tol, Strategy::default())?.to_integration_result())
}

/// ln N_n(α, p, β). Above degree 500 a miss at `tol` is retried at 1e−7 and
/// reported through [`NormValue::tolerance`].
pub fn exact_norm_ln(params: &NormParams, tol: f64, strategy: Strategy) -> Result<NormValue> {
    params.validate()?;
    if !(tol > 0.0) {
        return domain(format!("tolerance must be positive, got {tol}"));
    }
    let integrand = Integrand::new(params)?;
    let zeros = integrand.lag.zeros()?;
    let first = integrand.run(&zeros, tol, strategy);
    if first.converged || params.degree <= LARGE_DEGREE || tol >= FALLBACK_TOL {
        return Ok(first);
    }
    Ok(integrand.run(&zeros, FALLBACK_TOL, strategy))
}

/// The same integral on uniform panels that ignore the zeros; a cross-check
/// for moderate degree.
pub fn exact_norm_uniform(params: &NormParams, tol: f64, panels: usize) -> Result<NormValue> {
    params.validate()?;
    let integrand = Integrand::new(params)?;
    let zeros = integrand.lag.zeros()?;
    let (points, shift, bound) = integrand.layout(&zeros);
    let end = *points.last().expect("non-empty layout");
    let head = points[1];
    let mut grid = vec![0.0, head];
    let n = panels.max(1);
    for i in 1..=n {
        grid.push(head + (end - head) * i as f64 / n as f64);
    }
    Ok(integrand.finish(&grid, shift, bound, tol, Strategy::Sequential))
}

/// N_{n,l}(D, p) for a hydrogenic state.
pub fn hydrogenic_norm(state: &QuantumState, p: f64, tol: f64) -> Result<IntegrationResult> {
    exact_norm(&NormParams::hydrogenic(state, p)?, tol)
}

/// ln N_{n,l}(D, p).
pub fn hydrogenic_norm_ln(state: &QuantumState, p: f64, tol: f64, strategy: Strategy) -> Result<NormValue> {
    exact_norm_ln(&NormParams::hydrogenic(state, p)?, tol, strategy)
}

struct Integrand {
    params: NormParams,
    lag: Laguerre,
    q: f64,
}

impl Integrand {
    fn new(params: &NormParams) -> Result<Self> {
        Ok(Self {
            params: *params,
            lag: Laguerre::new(params.degree, params.alpha)?,
            q: power_exponent(params.origin_exponent()),
        })
    }

    fn ln_f(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return if self.params.origin_exponent() == 0.0 && x == 0.0 {
                self.ln_f(f64::MIN_POSITIVE)
            } else {
                f64::NEG_INFINITY
            };
        }
        let (s, lw) = self.lag.ln_weighted(x);
        if s == 0.0 {
            return f64::NEG_INFINITY;
        }
        2.0 * self.params.p * lw + self.params.beta * x.ln()
    }

    /// Breakpoints, log shift and the tail remainder bound (relative to the shift).
    fn layout(&self, zeros: &[f64]) -> (Vec<f64>, f64, f64) {
        let p = self.params.p;
        let k = self.params.degree as f64;
        // tail envelope x^c e^{−px}
        let c = 2.0 * p * k + self.params.origin_exponent();
        let x_star = (c / p).max(0.0);
        let head = match zeros.first() {
            Some(&z) => z,
            None => ((self.params.origin_exponent().max(0.0) + 1.0) / p).max(1e-3),
        };
        let mut points = vec![0.0, head];
        points.extend(zeros.iter().skip(1).copied());
        // sample lobes to locate the peak
        let mut peak = f64::NEG_INFINITY;
        for w in points.windows(2) {
            peak = peak.max(self.ln_f(0.5 * (w[0] + w[1])));
        }
        let last = *points.last().expect("non-empty");
        let step = if zeros.len() >= 2 {
            (2.0 * (zeros[zeros.len() - 1] - zeros[zeros.len() - 2])).max(1.0 / p)
        } else {
            (2.0 / p).max(head)
        };
        let mut x = last;
        let mut lf = self.ln_f(x + 0.5 * step);
        peak = peak.max(lf);
        loop {
            x += step;
            points.push(x);
            lf = self.ln_f(x);
            peak = peak.max(lf);
            if x >= 2.0 * x_star && lf < peak - TAIL_DROP {
                break;
            }
            if points.len() > 100_000 {
                break;
            }
        }
        // beyond 2x* the envelope decays at rate ≥ p/2
        let bound = (lf - peak).exp() * 2.0 / p;
        (points, peak, bound)
    }

    fn run(&self, zeros: &[f64], tol: f64, strategy: Strategy) -> NormValue {
        let (points, shift, bound) = self.layout(zeros);
        self.finish(&points, shift, bound, tol, strategy)
    }

    fn finish(&self, points: &[f64], shift: f64, bound: f64, tol: f64, strategy: Strategy) -> NormValue {
        let head = points[1];
        let q = self.q;
        let g = |y: f64| -> f64 {
            if y < head {
                let u = y / head;
                let x = head * u.powf(q);
                let v = (self.ln_f(x) - shift).exp();
                if v == 0.0 {
                    0.0
                } else {
                    v * q * u.powf(q - 1.0)
                }
            } else {
                (self.ln_f(y) - shift).exp()
            }
        };
        let cfg = QuadConfig::relative(0.5 * tol).with_max_subintervals((40 * points.len()).max(4000));
        let r = integrate_breakpoints(g, points, &cfg, strategy);
        let rel = (r.error_estimate + bound) / r.value.abs();
        NormValue {
            ln_value: shift + r.value.ln(),
            relative_error: rel,
            subintervals_used: r.subintervals_used,
            converged: r.value > 0.0 && rel <= tol,
            tolerance: tol,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_zero_closed_form() {
        let params = NormParams::new(1.0, 2.0, 0.5, 0).unwrap();
        let r = exact_norm(&params, 1e-12).unwrap();
        let want = params.ln_degree_zero().exp();
        assert!(((r.value - want) / want).abs() < 1e-11, "{} vs {want}", r.value);
    }

    #[test]
    fn orthonormality_at_p_one() {
        for (alpha, k) in [(0.0, 7), (1.0, 40), (3.5, 120)] {
            let r = exact_norm(&NormParams::new(alpha, 1.0, 0.0, k).unwrap(), 1e-12).unwrap();
            assert!((r.value - 1.0).abs() < 1e-10, "α={alpha} k={k}: {}", r.value);
        }
    }

    #[test]
    fn mean_of_the_measure() {
        for (alpha, k) in [(1.0, 5), (2.0, 60)] {
            let r = exact_norm(&NormParams::new(alpha, 1.0, 1.0, k).unwrap(), 1e-12).unwrap();
            let want = 2.0 * k as f64 + alpha + 1.0;
            assert!(((r.value - want) / want).abs() < 1e-10);
        }
    }

    #[test]
    fn hydrogen_ground_state() {
        let s = QuantumState::with_l(3, 1.0, 1, 0).unwrap();
        for p in [0.5, 2.0, 3.0] {
            let r = hydrogenic_norm(&s, p, 1e-12).unwrap();
            assert!((r.value - 2.0 / (p * p * p)).abs() < 1e-11);
        }
    }

    #[test]
    fn two_dimensional_mean() {
        let s = QuantumState::with_l(2, 1.0, 2, 0).unwrap();
        let r = hydrogenic_norm(&s, 1.0, 1e-12).unwrap();
        assert!((r.value - 3.0).abs() < 1e-10);
    }

    #[test]
    fn rejects_divergent_parameters() {
        assert!(matches!(NormParams::new(0.5, 2.0, -2.5, 3), Err(Error::Divergent(_))));
        assert!(NormParams::new(-1.0, 2.0, 0.0, 3).is_err());
        assert!(NormParams::new(1.0, 0.0, 0.0, 3).is_err());
    }

    #[test]
    fn singular_origin_is_handled() {
        // pα + β = −0.7
        let params = NormParams::new(0.0, 1.5, -0.7, 0).unwrap();
        let r = exact_norm(&params, 1e-11).unwrap();
        let want = params.ln_degree_zero().exp();
        assert!(((r.value - want) / want).abs() < 1e-10);
    }

    #[test]
    fn huge_values_stay_in_log_form() {
        // β far below zero pushes N beyond the double range
        let params = NormParams::new(200.0, 4.0, -590.0, 30).unwrap();
        let v = exact_norm_ln(&params, 1e-9, Strategy::Sequential).unwrap();
        assert!(v.converged && v.ln_value.is_finite());
        let v0 = exact_norm_ln(&NormParams::new(200.0, 4.0, -590.0, 0).unwrap(), 1e-10, Strategy::Sequential).unwrap();
        let want = NormParams::new(200.0, 4.0, -590.0, 0).unwrap().ln_degree_zero();
        assert!((v0.ln_value - want).abs() < 1e-9);
    }
}

//! Leading-order large-n estimate of N_{n,l}(D, p).

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hydrogenic::QuantumState;
use crate::specfun::gamma_ln;

use super::constants::{constant_c_ln, constant_ca, constant_cb_ln};
use super::regime::{classify_regime, RegimeClass, RegimeKind};

/// Which integer the ln factor of a transition regime is taken of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LogArgument {
    /// n_r = n − l − 1.
    RadialCount,
    /// The principal quantum number n.
    Principal,
}

/// n-independent part of the leading term: coefficient · n_r^e · [ln(·)].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LeadingTerm {
    /// ln of the positive prefactor of n_r^e; the prefactor itself can
    /// overflow for large D.
    pub ln_coefficient: f64,
    pub n_exponent: f64,
    pub log_factor: bool,
    pub log_argument: Option<LogArgument>,
    /// An unspecified O(1) term sits next to the ln.
    pub offset_unknown: bool,
    pub regime: RegimeClass,
}

impl LeadingTerm {
    pub fn coefficient(&self) -> f64 {
        self.ln_coefficient.exp()
    }

    /// ln of the estimate at (n_r, n).
    pub fn ln_value(&self, n_r: usize, n: u32) -> Result<f64> {
        if n_r == 0 {
            return Err(Error::Domain("the large-n estimate needs n_r = n − l − 1 ≥ 1".into()));
        }
        let mut v = self.ln_coefficient + self.n_exponent * (n_r as f64).ln();
        if let Some(arg) = self.log_argument {
            let x = match arg {
                LogArgument::RadialCount => n_r as f64,
                LogArgument::Principal => n as f64,
            };
            if x < 2.0 {
                return Err(Error::Domain(format!(
                    "the ln factor of the {} law needs its argument ≥ 2, got {x}",
                    self.regime.kind
                )));
            }
            v += x.ln().ln();
        }
        Ok(v)
    }
}

/// Coefficients and exponents of the leading term for real D ≥ 2 and
/// Laguerre parameter α (2l+D−2 for hydrogenic states).
pub fn leading_term(dim: f64, alpha: f64, p: f64) -> Result<LeadingTerm> {
    let regime = classify_regime(dim, p)?;
    let beta = regime.beta;
    let e = regime.n_exponent();
    let ln4 = 4f64.ln();
    let ln_pi = PI.ln();
    let ln_coefficient = match regime.kind {
        RegimeKind::Cosine => {
            let (sign, l) = constant_c_ln(beta, p)?;
            if sign <= 0.0 {
                return Err(Error::RegimeBoundary(format!("C(β={beta}, p={p}) is not positive")));
            }
            l + e * 2f64.ln()
        }
        RegimeKind::CosineAiry => {
            let three = (dim - 3.0).abs() <= super::regime::BOUNDARY_TOL;
            let scale = if three { 0.0 } else { e * ln4 };
            scale - 2.0 * ln_pi
        }
        RegimeKind::Airy => constant_ca(p)?.ln() - p * ln_pi + e * ln4,
        RegimeKind::CosineBessel => {
            2f64.ln() + gamma_ln(p + 0.5)? - (p + 0.5) * ln_pi - gamma_ln(p + 1.0)? - (1.0 + beta) * ln4
        }
        RegimeKind::Bessel => {
            let cb = constant_cb_ln(alpha, beta, p)?;
            if regime.mixed {
                let airy = constant_ca(p)?.ln() - p * ln_pi + e * ln4;
                ln_add(airy, cb)
            } else {
                cb
            }
        }
    };
    let log_factor = regime.kind.has_log();
    let log_argument = match regime.kind {
        RegimeKind::CosineAiry => Some(LogArgument::RadialCount),
        RegimeKind::CosineBessel => Some(LogArgument::Principal),
        _ => None,
    };
    Ok(LeadingTerm {
        ln_coefficient,
        n_exponent: e,
        log_factor,
        log_argument,
        offset_unknown: log_factor,
        regime,
    })
}

fn ln_add(a: f64, b: f64) -> f64 {
    let m = a.max(b);
    m + ((a - m).exp() + (b - m).exp()).ln()
}

/// The leading term evaluated at a concrete state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticEstimate {
    pub term: LeadingTerm,
    pub n_r: usize,
    pub n: u32,
    pub ln_value: f64,
}

impl AsymptoticEstimate {
    pub fn value(&self) -> f64 {
        self.ln_value.exp()
    }

    pub fn coefficient(&self) -> f64 {
        self.term.coefficient()
    }

    pub fn n_exponent(&self) -> f64 {
        self.term.n_exponent
    }

    pub fn log_factor(&self) -> bool {
        self.term.log_factor
    }

    pub fn offset_unknown(&self) -> bool {
        self.term.offset_unknown
    }

    pub fn regime(&self) -> &RegimeClass {
        &self.term.regime
    }
}

/// Large-n leading term of N_{n,l}(D, p) for a hydrogenic state.
pub fn asymptotic_norm(state: &QuantumState, p: f64) -> Result<AsymptoticEstimate> {
    state.validate()?;
    let term = leading_term(state.dim as f64, state.alpha(), p)?;
    let n_r = state.n_r();
    let ln_value = term.ln_value(n_r, state.n)?;
    Ok(AsymptoticEstimate { term, n_r, n: state.n, ln_value })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn state(dim: u32, n: u32, l: u32) -> QuantumState {
        QuantumState::with_l(dim, 1.0, n, l).unwrap()
    }

    #[test]
    fn linear_law_at_p_one() {
        let e = asymptotic_norm(&state(3, 101, 0), 1.0).unwrap();
        assert!((e.coefficient() - 2.0).abs() < 1e-13);
        assert_eq!(e.n_exponent(), 1.0);
        assert!((e.value() - 200.0).abs() < 1e-10);
    }

    #[test]
    fn three_dimensional_transition() {
        let e = asymptotic_norm(&state(3, 100, 0), 2.0).unwrap();
        let want = 99f64.ln() / (PI * PI * 99.0);
        assert!((e.value() - want).abs() < 1e-15);
        assert!(e.log_factor() && e.offset_unknown());
    }

    #[test]
    fn planar_airy() {
        let e = asymptotic_norm(&state(2, 100, 0), 3.0).unwrap();
        let want = constant_ca(3.0).unwrap() / PI.powi(3) * 396f64.powf(-2.0 / 3.0);
        assert!((e.value() / want - 1.0).abs() < 1e-13);
    }

    #[test]
    fn planar_mixed_line() {
        let e = asymptotic_norm(&state(2, 100, 0), 5.0).unwrap();
        let want = constant_ca(5.0).unwrap() / (PI.powi(5) * 16.0) + super::super::constants::constant_cb(0.0, 1.0, 5.0).unwrap();
        assert!((e.coefficient() / want - 1.0).abs() < 1e-12);
        assert_eq!(e.n_exponent(), -2.0);
        assert!(e.regime().mixed);
    }

    #[test]
    fn cosine_bessel_uses_principal_log() {
        let e = asymptotic_norm(&state(4, 100, 0), 1.6).unwrap();
        assert_eq!(e.term.log_argument, Some(LogArgument::Principal));
        let beta = -0.2;
        let want = 2.0 * super::super::constants::cos_power_mean(1.6) * PI.sqrt() / PI.powf(2.1) * 100f64.ln() / (4.0 * 99.0f64).powf(1.0 + beta);
        assert!((e.value() / want - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ground_state_has_no_estimate() {
        assert!(asymptotic_norm(&state(3, 1, 0), 1.5).is_err());
        // ln n_r vanishes at n_r = 1
        assert!(asymptotic_norm(&state(3, 2, 0), 2.0).is_err());
    }
}

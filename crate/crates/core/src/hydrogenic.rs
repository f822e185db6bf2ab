//! D-dimensional hydrogenic states: quantum numbers, energies, radial
//! densities and hyperspherical harmonics.

use std::f64::consts::{LN_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::specfun::{gamma_ln, gegenbauer, Laguerre};

/// A bound state (D, Z, n, l, {μ}) in atomic units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuantumState {
    pub dim: u32,
    pub z: f64,
    pub n: u32,
    pub l: u32,
    /// μ₂, …, μ_{D−1}; the last entry is the magnetic number m and may be
    /// negative. Empty for D = 2.
    pub mu: Vec<i64>,
}

impl QuantumState {
    pub fn new(dim: u32, z: f64, n: u32, l: u32, mu: Vec<i64>) -> Result<Self> {
        let state = Self { dim, z, n, l, mu };
        state.validate()?;
        Ok(state)
    }

    /// The state with the given (n, l) and μ₂ = … = m = 0.
    pub fn with_l(dim: u32, z: f64, n: u32, l: u32) -> Result<Self> {
        let len = dim.saturating_sub(2) as usize;
        Self::new(dim, z, n, l, vec![0; len])
    }

    /// Checks D from a real-valued input before building a state.
    pub fn dimension_from_real(d: f64) -> Result<u32> {
        if !(d >= 2.0) || d.fract() != 0.0 || d > 1e6 {
            return Err(Error::UnsupportedDimension(d));
        }
        Ok(d as u32)
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim < 2 {
            return Err(Error::UnsupportedDimension(self.dim as f64));
        }
        if !(self.z > 0.0) || !self.z.is_finite() {
            return domain(format!("nuclear charge must be positive, got {}", self.z));
        }
        if self.n < 1 {
            return domain("principal quantum number must be >= 1");
        }
        if self.l >= self.n {
            return domain(format!("need l <= n - 1, got n = {}, l = {}", self.n, self.l));
        }
        HarmonicSpec::new(self.dim, self.l, self.mu.clone()).map(|_| ())
    }

    /// η = n + (D−3)/2.
    pub fn eta(&self) -> f64 {
        self.n as f64 + (self.dim as f64 - 3.0) / 2.0
    }

    /// Grand orbital number L = l + (D−3)/2.
    pub fn grand_l(&self) -> f64 {
        self.l as f64 + (self.dim as f64 - 3.0) / 2.0
    }

    /// λ = η/(2Z); the radial variable is r̃ = r/λ.
    pub fn lambda_scale(&self) -> f64 {
        self.eta() / (2.0 * self.z)
    }

    /// Radial polynomial degree n − l − 1 (equal to η − L − 1).
    pub fn n_r(&self) -> usize {
        (self.n - self.l - 1) as usize
    }

    /// Laguerre parameter α = 2l + D − 2 (= 2L + 1).
    pub fn alpha(&self) -> f64 {
        2.0 * self.l as f64 + self.dim as f64 - 2.0
    }

    pub fn harmonic(&self) -> HarmonicSpec {
        HarmonicSpec { dim: self.dim, l: self.l, mu: self.mu.clone() }
    }

    /// The same state with a different nuclear charge.
    pub fn with_z(&self, z: f64) -> Result<Self> {
        Self::new(self.dim, z, self.n, self.l, self.mu.clone())
    }
}

/// E = −Z²/(2η²) in Hartree.
pub fn energy(state: &QuantumState) -> f64 {
    let eta = state.eta();
    -state.z * state.z / (2.0 * eta * eta)
}

/// Radial density ρ_{n,l}(r), normalized by ∫ρ r^{D−1} dr = 1.
#[derive(Debug, Clone)]
pub struct RadialDensity {
    state: QuantumState,
    laguerre: Laguerre,
    ln_prefactor: f64,
}

impl RadialDensity {
    pub fn new(state: &QuantumState) -> Result<Self> {
        state.validate()?;
        let laguerre = Laguerre::new(state.n_r(), state.alpha())?;
        let ln_prefactor = -(state.dim as f64) * state.lambda_scale().ln() - (2.0 * state.eta()).ln();
        Ok(Self { state: state.clone(), laguerre, ln_prefactor })
    }

    pub fn state(&self) -> &QuantumState {
        &self.state
    }

    /// ln ρ(r); `-inf` at nodes.
    pub fn ln_eval(&self, r: f64) -> f64 {
        let x = r / self.state.lambda_scale();
        let (s, lw) = self.laguerre.ln_weighted(x);
        if s == 0.0 {
            return f64::NEG_INFINITY;
        }
        self.ln_prefactor + 2.0 * lw + (2.0 - self.state.dim as f64) * x.ln()
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.ln_eval(r).exp()
    }

    /// K²_{n,l} = λ^{−D}·n_r!/(2η·Γ(n+l+D−2)), the constant in front of
    /// r̃^{2l}e^{−r̃}[L_{n_r}^{(α)}(r̃)]².
    pub fn normalization_sq(&self) -> f64 {
        self.ln_normalization_sq().exp()
    }

    pub fn ln_normalization_sq(&self) -> f64 {
        let s = &self.state;
        let nr = s.n_r() as f64;
        self.ln_prefactor + gamma_ln(nr + 1.0).expect("positive")
            - gamma_ln((s.n + s.l + s.dim) as f64 - 2.0).expect("positive")
    }
}

/// ρ_{n,l}(r) for r > 0.
pub fn radial_density(state: &QuantumState, r: f64) -> Result<f64> {
    if !(r > 0.0) || !r.is_finite() {
        return domain(format!("radius must be positive, got {r}"));
    }
    Ok(RadialDensity::new(state)?.eval(r))
}

/// The angular quantum numbers (D, l, {μ}) of a hyperspherical harmonic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HarmonicSpec {
    pub dim: u32,
    pub l: u32,
    /// μ₂, …, μ_{D−1} as in [`QuantumState::mu`].
    pub mu: Vec<i64>,
}

/// One separable θⱼ factor 𝒞^{λ}_{degree}(cos θ)·sin^{sin_power}θ, integrated
/// against sin^{weight_power}θ dθ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThetaFactor {
    pub degree: usize,
    pub lambda: f64,
    pub sin_power: u32,
    /// 2αⱼ = D − j − 1.
    pub weight_power: f64,
}

impl ThetaFactor {
    /// 𝒞^{λ}_{degree}(cos θ)·sin^{sin_power}θ.
    pub fn value(&self, theta: f64) -> f64 {
        crate::specfun::gegenbauer::eval(self.degree, self.lambda, theta.cos()) * theta.sin().powi(self.sin_power as i32)
    }
}

impl HarmonicSpec {
    pub fn new(dim: u32, l: u32, mu: Vec<i64>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::UnsupportedDimension(dim as f64));
        }
        if mu.len() != dim as usize - 2 {
            return domain(format!("D = {dim} needs {} numbers μ₂..μ_(D−1), got {}", dim - 2, mu.len()));
        }
        let mut prev = l as i64;
        for (i, &m) in mu.iter().enumerate() {
            let last = i + 1 == mu.len();
            let mag = if last { m.abs() } else { m };
            if mag < 0 || mag > prev {
                return domain(format!("hyperquantum chain must satisfy l ≥ μ₂ ≥ … ≥ |m|, got l = {l}, μ = {mu:?}"));
            }
            prev = mag;
        }
        Ok(Self { dim, l, mu })
    }

    /// (μ₁, …, μ_{D−1}) with μ₁ = l and |m| in the last slot.
    pub fn chain(&self) -> Vec<u32> {
        let mut c = vec![self.l];
        c.extend(self.mu.iter().map(|m| m.unsigned_abs() as u32));
        c
    }

    /// |m|; equal to l when D = 2.
    pub fn abs_m(&self) -> u32 {
        *self.chain().last().expect("non-empty chain")
    }

    pub fn theta_factors(&self) -> Vec<ThetaFactor> {
        let c = self.chain();
        (1..=self.dim as usize - 2)
            .map(|j| {
                let two_alpha = self.dim as f64 - j as f64 - 1.0;
                ThetaFactor {
                    degree: (c[j - 1] - c[j]) as usize,
                    lambda: 0.5 * two_alpha + c[j] as f64,
                    sin_power: c[j],
                    weight_power: two_alpha,
                }
            })
            .collect()
    }

    /// ln 𝒩²_{l,{μ}}.
    pub fn ln_norm_sq(&self) -> f64 {
        let c = self.chain();
        let mut total = -(2.0 * PI).ln();
        for j in 1..=self.dim as usize - 2 {
            let aj = 0.5 * (self.dim as f64 - j as f64 - 1.0);
            let (mj, mj1) = (c[j - 1] as f64, c[j] as f64);
            total += (aj + mj).ln() + lg(mj - mj1 + 1.0) + 2.0 * lg(aj + mj1)
                - PI.ln()
                - (1.0 - 2.0 * aj - 2.0 * mj1) * LN_2
                - lg(2.0 * aj + mj + mj1);
        }
        total
    }

    pub fn norm_sq(&self) -> f64 {
        self.ln_norm_sq().exp()
    }

    /// |𝒴(θ₁, …, θ_{D−2}, φ)|², which does not depend on φ.
    pub fn density(&self, thetas: &[f64]) -> Result<f64> {
        let factors = self.theta_factors();
        if thetas.len() != factors.len() {
            return domain(format!("expected {} angles, got {}", factors.len(), thetas.len()));
        }
        let mut v = self.norm_sq();
        for (f, &th) in factors.iter().zip(thetas) {
            gegenbauer(f.degree, f.lambda, th.cos())?;
            v *= f.value(th).powi(2);
        }
        Ok(v)
    }
}

fn lg(x: f64) -> f64 {
    gamma_ln(x).expect("positive argument")
}

/// 𝒩²_{l,{μ}} of the normalized harmonic.
pub fn harmonic_norm_sq(spec: &HarmonicSpec) -> Result<f64> {
    let checked = HarmonicSpec::new(spec.dim, spec.l, spec.mu.clone())?;
    Ok(checked.norm_sq())
}

/// θⱼ ↦ sin^{2αⱼ}θⱼ with 2αⱼ = D − j − 1, for 1 ≤ j ≤ D − 2.
pub fn solid_angle_weight(dim: u32, j: u32) -> Result<impl Fn(f64) -> f64> {
    if dim < 3 || j < 1 || j > dim - 2 {
        return domain(format!("axis index j = {j} outside 1..=D-2 for D = {dim}"));
    }
    let power = (dim - j - 1) as i32;
    Ok(move |theta: f64| theta.sin().powi(power))
}

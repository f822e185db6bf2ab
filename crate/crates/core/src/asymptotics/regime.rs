//! Which asymptotic regime governs N_{n,l}(D, p) as n → ∞.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance for comparing p (and D) with regime boundaries.
pub const BOUNDARY_TOL: f64 = 1e-12;

/// The five regime kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegimeKind {
    Cosine,
    Airy,
    Bessel,
    CosineAiry,
    CosineBessel,
}

impl RegimeKind {
    pub fn label(self) -> &'static str {
        match self {
            RegimeKind::Cosine => "cosine",
            RegimeKind::Airy => "airy",
            RegimeKind::Bessel => "bessel",
            RegimeKind::CosineAiry => "cosine-airy",
            RegimeKind::CosineBessel => "cosine-bessel",
        }
    }

    /// Transition regimes carry an extra ln n factor.
    pub fn has_log(self) -> bool {
        matches!(self, RegimeKind::CosineAiry | RegimeKind::CosineBessel)
    }
}

impl fmt::Display for RegimeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The branch of the case analysis a point (D, p) falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseLabel {
    /// β > 0, D > 2: cosine law for p < (D−1)/(D−2).
    CosineBetaPositive,
    /// D = 2 (β = 1), p < 2.
    CosinePlanar,
    /// D = 2, p = 2.
    CosineAiryPlanar,
    /// D = 2, 2 < p < 5.
    AiryPlanar,
    /// D = 2, p = 5: Airy and Bessel contributions of equal order.
    MixedPlanar,
    /// D = 2, p > 5.
    BesselPlanar,
    /// β = 0: p = (D−1)/(D−2), D > 3.
    CosineBetaZero,
    /// D = 3, p = 2.
    CosineAiryThreeDim,
    /// β < 0, (D−1)/(D−2) < p < 2D/(2D−3).
    CosineBetaNegative,
    /// β < 0, p = 2D/(2D−3) = 2 + 2β, D > 3.
    CosineBesselBetaNegative,
    /// β < 0, p > 2D/(2D−3) (includes D = 3, p > 2).
    BesselBetaNegative,
    /// Non-integer 2 < D < 3, p = 2.
    CosineAiryFractional,
    /// Non-integer 2 < D < 3, 2 < p < (3D−1)/(3D−5).
    AiryFractional,
    /// Non-integer 2 < D < 3, p = (3D−1)/(3D−5).
    MixedFractional,
    /// Non-integer 2 < D < 3, p > (3D−1)/(3D−5).
    BesselFractional,
}

/// Classification of (D, p).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimeClass {
    pub kind: RegimeKind,
    pub case: CaseLabel,
    pub dim: f64,
    pub p: f64,
    /// β = (2−D)p + D − 1.
    pub beta: f64,
    /// (D−1)/(D−2), defined for D > 2.
    pub p_low: Option<f64>,
    /// 2D/(2D−3).
    pub p_high: f64,
    /// Airy–Bessel boundary (3D−1)/(3D−5), defined for 2 ≤ D < 3.
    pub p_airy_bessel: Option<f64>,
    /// Bessel-kind estimate whose coefficient also carries the Airy constant.
    pub mixed: bool,
}

impl RegimeClass {
    /// Power of n_r in the leading term.
    pub fn n_exponent(&self) -> f64 {
        let (d, p, b) = (self.dim, self.p, self.beta);
        match self.kind {
            RegimeKind::Cosine => 1.0 + b - p,
            RegimeKind::Airy => b + (1.0 - 2.0 * p) / 3.0,
            RegimeKind::Bessel | RegimeKind::CosineBessel => -(1.0 + b),
            RegimeKind::CosineAiry => {
                if same(d, 3.0) {
                    -1.0
                } else {
                    b - 1.0
                }
            }
        }
    }
}

/// β = (2−D)p + D − 1.
pub fn beta_of(dim: f64, p: f64) -> f64 {
    (2.0 - dim) * p + dim - 1.0
}

/// (D−1)/(D−2) for D > 2.
pub fn p_low(dim: f64) -> Option<f64> {
    (dim > 2.0 + BOUNDARY_TOL).then(|| (dim - 1.0) / (dim - 2.0))
}

/// 2D/(2D−3), where 2 + 2β = p.
pub fn p_high(dim: f64) -> f64 {
    2.0 * dim / (2.0 * dim - 3.0)
}

/// (3D−1)/(3D−5), where the Airy and Bessel powers of n coincide.
pub fn p_airy_bessel(dim: f64) -> f64 {
    (3.0 * dim - 1.0) / (3.0 * dim - 5.0)
}

fn same(a: f64, b: f64) -> bool {
    (a - b).abs() <= BOUNDARY_TOL
}

/// Regime of (D, p) for real D ≥ 2 and p > 0.
pub fn classify_regime(dim: f64, p: f64) -> Result<RegimeClass> {
    if !(dim >= 2.0 - BOUNDARY_TOL) || !dim.is_finite() {
        return Err(Error::UnsupportedDimension(dim));
    }
    if !(p > 0.0) || !p.is_finite() {
        return Err(Error::Domain(format!("order p must be positive, got {p}")));
    }
    use CaseLabel::*;
    use RegimeKind::*;
    let planar = same(dim, 2.0);
    let three = same(dim, 3.0);
    let (kind, case) = if planar {
        if same(p, 2.0) {
            (CosineAiry, CosineAiryPlanar)
        } else if p < 2.0 {
            (Cosine, CosinePlanar)
        } else if same(p, 5.0) {
            (Bessel, MixedPlanar)
        } else if p < 5.0 {
            (Airy, AiryPlanar)
        } else {
            (Bessel, BesselPlanar)
        }
    } else if three {
        if same(p, 2.0) {
            (CosineAiry, CosineAiryThreeDim)
        } else if p < 2.0 {
            (Cosine, CosineBetaPositive)
        } else {
            (Bessel, BesselBetaNegative)
        }
    } else if dim < 3.0 {
        let pab = p_airy_bessel(dim);
        if same(p, 2.0) {
            (CosineAiry, CosineAiryFractional)
        } else if p < 2.0 {
            (Cosine, CosineBetaPositive)
        } else if same(p, pab) {
            (Bessel, MixedFractional)
        } else if p < pab {
            (Airy, AiryFractional)
        } else {
            (Bessel, BesselFractional)
        }
    } else {
        let lo = (dim - 1.0) / (dim - 2.0);
        let hi = p_high(dim);
        if same(p, lo) {
            (Cosine, CosineBetaZero)
        } else if p < lo {
            (Cosine, CosineBetaPositive)
        } else if same(p, hi) {
            (CosineBessel, CosineBesselBetaNegative)
        } else if p < hi {
            (Cosine, CosineBetaNegative)
        } else {
            (Bessel, BesselBetaNegative)
        }
    };
    let mut beta = beta_of(dim, p);
    if case == CosineBetaZero {
        beta = 0.0;
    }
    Ok(RegimeClass {
        kind,
        case,
        dim,
        p,
        beta,
        p_low: p_low(dim),
        p_high: p_high(dim),
        p_airy_bessel: (dim < 3.0 - BOUNDARY_TOL).then(|| p_airy_bessel(dim)),
        mixed: matches!(case, MixedPlanar | MixedFractional),
    })
}

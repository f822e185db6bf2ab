//! Globally adaptive 21-point Gauss–Kronrod quadrature.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::exec::{self, Strategy};

/// Outcome of a numerical integration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegrationResult {
    pub value: f64,
    pub error_estimate: f64,
    pub subintervals_used: usize,
    pub converged: bool,
}

impl IntegrationResult {
    pub(crate) fn zero() -> Self {
        Self { value: 0.0, error_estimate: 0.0, subintervals_used: 0, converged: true }
    }

    /// Converts a non-converged result into [`crate::Error::NotConverged`].
    pub fn into_result(self, tolerance: f64) -> crate::Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(crate::Error::NotConverged {
                value: self.value,
                error_estimate: self.error_estimate,
                tolerance,
            })
        }
    }
}

/// Stopping rule: stop once `error ≤ max(abs_tol, rel_tol·|value|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subintervals: usize,
}

impl QuadConfig {
    /// Same tolerance used as absolute and relative bound.
    pub fn new(tol: f64) -> Self {
        Self { abs_tol: tol, rel_tol: tol, max_subintervals: 2000 }
    }

    /// Purely relative tolerance.
    pub fn relative(tol: f64) -> Self {
        Self { abs_tol: 0.0, rel_tol: tol, max_subintervals: 2000 }
    }

    pub fn with_max_subintervals(mut self, n: usize) -> Self {
        self.max_subintervals = n;
        self
    }

    fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self::new(1e-10)
    }
}

// QUADPACK qk21 nodes and weights
#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn qk21<F: Fn(f64) -> f64 + ?Sized>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut res_k = fc * WGK[10];
    let mut res_g = 0.0;
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    #[allow(clippy::needless_range_loop)]
    for j in 0..5 {
        let jj = 2 * j + 1;
        let dx = half * XGK[jj];
        let (f1, f2) = (f(center - dx), f(center + dx));
        fv1[jj] = f1;
        fv2[jj] = f2;
        res_g += WG[j] * (f1 + f2);
        res_k += WGK[jj] * (f1 + f2);
        res_abs += WGK[jj] * (f1.abs() + f2.abs());
    }
    for j in 0..5 {
        let jj = 2 * j;
        let dx = half * XGK[jj];
        let (f1, f2) = (f(center - dx), f(center + dx));
        fv1[jj] = f1;
        fv2[jj] = f2;
        res_k += WGK[jj] * (f1 + f2);
        res_abs += WGK[jj] * (f1.abs() + f2.abs());
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let err = ((res_k - res_g) * half).abs();
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut error = err;
    if res_asc != 0.0 && err != 0.0 {
        error = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    let value = res_k * half;
    if !value.is_finite() {
        return Panel { a, b, value, error: f64::INFINITY };
    }
    Panel { a, b, value, error }
}

/// Integrates `f` over `[a, b]`; `b` may be `+∞`, in which case the map
/// x = a + (1−u)/u is applied. `tol` bounds both absolute and relative error.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> IntegrationResult {
    integrate(f, a, b, &QuadConfig::new(tol))
}

/// As [`integrate_adaptive`] with an explicit configuration.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, cfg: &QuadConfig) -> IntegrationResult {
    if b == f64::INFINITY {
        let g = |u: f64| {
            let x = a + (1.0 - u) / u;
            let v = f(x);
            if v == 0.0 {
                0.0
            } else {
                v / (u * u)
            }
        };
        return refine(&g, vec![qk21(&g, 0.0, 1.0)], cfg);
    }
    if a == b {
        return IntegrationResult::zero();
    }
    refine(&f, vec![qk21(&f, a, b)], cfg)
}

/// Integrates over `[points[0], points[last]]` with the given interior
/// breakpoints (cusps, zeros, kinks). A single error budget is shared by all
/// panels, so effort goes where the error is.
pub fn integrate_breakpoints<F>(f: F, points: &[f64], cfg: &QuadConfig, strategy: Strategy) -> IntegrationResult
where
    F: Fn(f64) -> f64 + Sync,
{
    if points.len() < 2 {
        return IntegrationResult::zero();
    }
    let panels = exec::map_range(strategy, points.len() - 1, |i| qk21(&f, points[i], points[i + 1]));
    refine(&f, panels, cfg)
}

/// Integrates `f` on `[a, b]` when `f(x) ~ (x−a)^s` at the left end with a
/// non-integer `s > −1`, by the substitution x = a + (b−a)·u^q.
pub fn integrate_power_endpoint<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, s: f64, cfg: &QuadConfig) -> IntegrationResult {
    let q = power_exponent(s);
    if q == 1.0 {
        return integrate(f, a, b, cfg);
    }
    let w = b - a;
    let g = |u: f64| {
        let v = f(a + w * u.powf(q));
        if v == 0.0 {
            0.0
        } else {
            v * w * q * u.powf(q - 1.0)
        }
    };
    integrate(g, 0.0, 1.0, cfg)
}

/// Exponent q of the map x = u^q that makes x^s smooth enough for Kronrod:
/// 1 for integer or large s, else ⌈2/(s+1)⌉.
pub(crate) fn power_exponent(s: f64) -> f64 {
    if s >= 1.0 || (s - s.round()).abs() < 1e-12 {
        1.0
    } else {
        (2.0 / (s + 1.0)).ceil().clamp(1.0, 40.0)
    }
}

fn refine<F: Fn(f64) -> f64 + ?Sized>(f: &F, panels: Vec<Panel>, cfg: &QuadConfig) -> IntegrationResult {
    let mut heap: BinaryHeap<Panel> = BinaryHeap::with_capacity(panels.len() * 2);
    let mut total = 0.0;
    let mut total_err = 0.0;
    let mut count = panels.len();
    // panels too narrow to split further keep their contribution here
    let mut frozen_err = 0.0;
    for p in panels {
        total += p.value;
        total_err += p.error;
        heap.push(p);
    }
    loop {
        if total_err <= cfg.target(total) {
            break;
        }
        if count >= cfg.max_subintervals.max(1) {
            break;
        }
        let Some(worst) = heap.pop() else { break };
        let mid = 0.5 * (worst.a + worst.b);
        let scale = worst.a.abs().max(worst.b.abs()).max(f64::MIN_POSITIVE);
        if (worst.b - worst.a).abs() <= 1e3 * f64::EPSILON * scale || mid == worst.a || mid == worst.b {
            frozen_err += worst.error;
            if heap.is_empty() {
                break;
            }
            continue;
        }
        let mut left = qk21(f, worst.a, mid);
        let mut right = qk21(f, mid, worst.b);
        // the bisection exposes the parent's real error. Near an unannounced
        // kink a halving gains only a factor 2^{1+s}, while the Kronrod
        // heuristic may claim orders of magnitude, so the children keep it
        let seen = (left.value + right.value - worst.value).abs();
        left.error = left.error.max(seen);
        right.error = right.error.max(seen);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        count += 1;
        heap.push(left);
        heap.push(right);
    }
    // recompute to shed accumulated cancellation in the running sums
    let mut value = 0.0;
    let mut error = frozen_err;
    for p in heap.iter() {
        value += p.value;
        error += p.error;
    }
    let converged = error <= cfg.target(value) && value.is_finite();
    IntegrationResult { value, error_estimate: error, subintervals_used: count, converged }
}

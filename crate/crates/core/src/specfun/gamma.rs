//! Log-Gamma, backed by the musl/FreeBSD `lgamma_r` port in `libm`.

use crate::error::{domain, Result};

/// ln Γ(x) for x > 0.
pub fn gamma_ln(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("gamma_ln requires a finite x > 0, got {x}"));
    }
    Ok(libm::lgamma_r(x).0)
}

/// ln |Γ(x)| together with the sign of Γ(x), for any real x.
///
/// At the poles (x = 0, -1, -2, ...) the magnitude is `+inf` and the sign is
/// reported as `0.0`.
pub fn gamma_ln_signed(x: f64) -> (f64, f64) {
    if x <= 0.0 && x == x.floor() {
        return (f64::INFINITY, 0.0);
    }
    let (lg, sign) = libm::lgamma_r(x);
    (lg, if sign < 0 { -1.0 } else { 1.0 })
}

/// True when `x` is within `tol` of a non-positive integer (a pole of Γ).
pub(crate) fn near_gamma_pole(x: f64, tol: f64) -> bool {
    x < tol && (x - x.round()).abs() <= tol
}

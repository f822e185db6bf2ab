//! Bracketed scalar root refinement shared by the zero locators.

/// Refines a sign-changing bracket `[a, b]` of `f` with the Illinois variant
/// of regula falsi, falling back to bisection when it stalls.
///
/// `fa` and `fb` are `f(a)` and `f(b)`; they must have opposite signs.
pub(crate) fn illinois<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, mut fa: f64, mut fb: f64) -> f64 {
    debug_assert!(fa * fb <= 0.0);
    if fa == 0.0 {
        return a;
    }
    if fb == 0.0 {
        return b;
    }
    let mut side = 0i8;
    for it in 0..200 {
        let width = (b - a).abs();
        if width <= 4.0 * f64::EPSILON * a.abs().max(b.abs()) || width == 0.0 {
            break;
        }
        // every few steps force a bisection so the bracket always shrinks
        let c = if it % 4 == 3 {
            0.5 * (a + b)
        } else {
            let c = (a * fb - b * fa) / (fb - fa);
            if c.is_finite() && c > a.min(b) && c < a.max(b) {
                c
            } else {
                0.5 * (a + b)
            }
        };
        let fc = f(c);
        if fc == 0.0 {
            return c;
        }
        if fc.signum() == fb.signum() {
            b = c;
            fb = fc;
            if side == -1 {
                fa *= 0.5;
            }
            side = -1;
        } else {
            a = c;
            fa = fc;
            if side == 1 {
                fb *= 0.5;
            }
            side = 1;
        }
    }
    if fa.abs() < fb.abs() {
        a
    } else {
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_cube_root() {
        let f = |x: f64| x * x * x - 2.0;
        let r = illinois(f, 0.0, 2.0, f(0.0), f(2.0));
        assert!((r - 2f64.cbrt()).abs() < 1e-15);
    }

    #[test]
    fn handles_flat_function() {
        let f = |x: f64| (x - 0.3).powi(9);
        let r = illinois(f, 0.0, 1.0, f(0.0), f(1.0));
        assert!((r - 0.3).abs() < 1e-3);
    }
}

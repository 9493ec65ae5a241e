//! Lambert W on the nonnegative reals.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum LambertError {
    #[error("lambert w is implemented for x >= 0, got {0}")]
    NegativeArgument(f64),
    #[error("halley iteration failed to converge for x = {0}")]
    NoConvergence(f64),
}

const REL_TOL: f64 = 1e-13;
const MAX_ITERS: u32 = 50;

/// The inverse of `w -> w e^w` for `x >= 0`, by Halley iteration from the
/// starting guess `log(1 + x)`, to relative tolerance `1e-13`.
pub fn lambert_w(x: f64) -> Result<f64, LambertError> {
    if x < 0.0 || x.is_nan() {
        return Err(LambertError::NegativeArgument(x));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let mut w = x.ln_1p();
    for _ in 0..MAX_ITERS {
        let ew = w.exp();
        let f = w * ew - x;
        let fp = ew * (w + 1.0);
        let step = f / (fp - (w + 2.0) * f / (2.0 * w + 2.0));
        w -= step;
        if step.abs() <= REL_TOL * w.abs().max(f64::MIN_POSITIVE) {
            return Ok(w);
        }
    }
    Err(LambertError::NoConvergence(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_points() {
        assert_eq!(lambert_w(0.0).unwrap(), 0.0);
        let at_e = lambert_w(std::f64::consts::E).unwrap();
        assert!((at_e - 1.0).abs() < 1e-13, "W(e) = {}", at_e);
    }

    #[test]
    fn defining_equation_residual() {
        for &x in &[0.1, 0.5, 1.0, 10.0, 123.456, 1e4, 1e8] {
            let w = lambert_w(x).unwrap();
            let residual = (w * w.exp() - x).abs() / x;
            assert!(residual < 1e-13, "x = {} residual {}", x, residual);
        }
    }

    #[test]
    fn round_trip_through_forward_map() {
        for &w in &[0.25f64, 1.0, 3.0, 7.5] {
            let x = w * w.exp();
            let back = lambert_w(x).unwrap();
            assert!((back - w).abs() < 1e-12 * w, "w = {}", w);
        }
    }

    #[test]
    fn bounded_by_log() {
        for &x in &[std::f64::consts::E, 3.0, 10.0, 1e3, 1e6] {
            assert!(lambert_w(x).unwrap() <= x.ln() + 1e-14, "x = {}", x);
        }
    }

    #[test]
    fn negative_rejected() {
        assert_eq!(lambert_w(-0.1), Err(LambertError::NegativeArgument(-0.1)));
    }
}

//! Taylor coefficients of `Gamma(z+1)` from zeta values, with numeric
//! validation against closed-form and quadrature references.
//!
//! Exponentiating `log Gamma(1+z) = -gamma z + sum_{k>=2} (-1)^k zeta(k) z^k / k`
//! term by term with De Moivre polynomials gives
//!
//! ```text
//! Gamma(z+1) = sum_m [ sum_j (1/j!) A_{m,j}(gamma, zeta(2)/2, zeta(3)/3, ...) ] (-z)^m,
//! ```
//!
//! convergent for `|z| < 1`. The coefficients tend to 1 (the expansion
//! variable sees the pole of `Gamma` at distance 1), so a truncation at
//! order `N` carries a remainder near `|z|^{N+1} / (1 - |z|)`: at order 20
//! that is a few times `1e-13` for `|z| = 1/4`, under `1e-8` for
//! `|z| <= 0.4`, but only about `1e-6` at the half-radius `|z| = 1/2`.
//! The checks encode exactly those graded tolerances.
//!
//! The related factorial expansion `n! ~ sqrt(2 pi n)(n/e)^n sum gamma_m n^{-m}`
//! and its reciprocal share coefficients up to alternating signs because the
//! underlying exponentiated series has odd powers only; the product check
//! [`odd_series_product_check`] verifies that cancellation exactly.

use crate::algebra::scalar::{rat_int, rat_to_f64, Rat};
use crate::demoivre::{demoivre_table, DemoivreError};
use crate::sequences::bernoulli::bernoulli_upto;
use crate::series::{Series, SeriesError};

use super::integral::adaptive_quadrature;

/// Euler's constant.
pub const EULER_GAMMA: f64 = 0.5772156649015329;

/// `zeta(s)` for integer `s >= 2` by Euler-Maclaurin summation with cutoff
/// `N = 20` and six Bernoulli correction terms; accurate to full double
/// precision over the range used here.
pub fn zeta_int_f64(s: u32) -> f64 {
    assert!(s >= 2, "the series needs s >= 2");
    let n = 20.0f64;
    let sf = s as f64;
    let mut sum = 0.0;
    for k in 1..20u32 {
        sum += (k as f64).powf(-sf);
    }
    sum += n.powf(1.0 - sf) / (sf - 1.0);
    sum += 0.5 * n.powf(-sf);
    let bern = bernoulli_upto(12);
    let mut factorial = 1.0f64;
    for j in 1..=6u32 {
        factorial *= (2 * j - 1) as f64 * (2 * j) as f64;
        let mut rising = 1.0;
        for i in 0..(2 * j - 1) {
            rising *= sf + i as f64;
        }
        sum += rat_to_f64(&bern[2 * j as usize]) / factorial * rising * n.powf(-sf - 2.0 * j as f64 + 1.0);
    }
    sum
}

/// Coefficients `g_0 .. g_order` with `Gamma(z+1) = sum_m g_m (-z)^m`.
pub fn gamma_taylor_coeffs(order: u32) -> Result<Vec<f64>, DemoivreError> {
    let mut args = Vec::with_capacity(order as usize);
    for i in 1..=order {
        args.push(if i == 1 {
            EULER_GAMMA
        } else {
            zeta_int_f64(i) / i as f64
        });
    }
    let table = demoivre_table::<f64>(order as usize, order as usize, &args)?;
    let mut out = Vec::with_capacity(order as usize + 1);
    for m in 0..=order as usize {
        let mut acc = 0.0;
        let mut j_factorial = 1.0;
        for (j, row) in table.iter().enumerate().take(m + 1) {
            if j > 0 {
                j_factorial *= j as f64;
            }
            acc += row[m] / j_factorial;
        }
        out.push(acc);
    }
    Ok(out)
}

/// `Gamma(z+1)` from the truncated expansion; meaningful for `|z| < 1`.
pub fn gamma_taylor_eval(z: f64, order: u32) -> Result<f64, DemoivreError> {
    let coeffs = gamma_taylor_coeffs(order)?;
    let y = -z;
    let mut acc = 0.0;
    for g in coeffs.iter().rev() {
        acc = acc * y + g;
    }
    Ok(acc)
}

/// `Gamma(1+x)` for `x > -0.8` by quadrature after the substitution
/// `t = s^5`, which smooths the endpoint: `5 int_0^inf s^{5x+4} e^{-s^5} ds`.
pub fn gamma_quadrature_reference(x: f64) -> f64 {
    let power = 5.0 * x + 4.0;
    let q = adaptive_quadrature(&|s: f64| 5.0 * s.powf(power) * (-s.powi(5)).exp(), 0.0, 3.4, 1e-13);
    q.value
}

/// One validation point of the Taylor expansion.
#[derive(Debug, Clone)]
pub struct GammaSample {
    pub z: f64,
    pub reference: f64,
    pub computed: f64,
    pub error: f64,
    /// Truncation-derived bound this sample is held to.
    pub tolerance: f64,
}

impl GammaSample {
    pub fn passes(&self) -> bool {
        self.error <= self.tolerance
    }
}

/// Evaluates the expansion at `z in {0, +-1/4, +-2/5, +-1/2}` against
/// closed-form values where available and quadrature elsewhere. Tolerances
/// follow the truncation remainder: `1e-11` for `|z| <= 1/4`, `1e-8` for
/// `|z| <= 2/5`, `2e-6` at the half-radius points.
pub fn gamma_taylor_check(order: u32) -> Result<Vec<GammaSample>, DemoivreError> {
    assert!((1..=20).contains(&order), "supported orders are 1..=20");
    let coeffs = gamma_taylor_coeffs(order)?;
    let eval = |z: f64| {
        let y = -z;
        let mut acc = 0.0;
        for g in coeffs.iter().rev() {
            acc = acc * y + g;
        }
        acc
    };

    // Gamma(1.4) by quadrature; Gamma(0.6) from it by reflection,
    // Gamma(0.6) Gamma(0.4) = pi / sin(0.4 pi) with Gamma(0.4) = Gamma(1.4)/0.4.
    let gamma_14 = gamma_quadrature_reference(0.4);
    let gamma_06 = std::f64::consts::PI * 0.4 / ((0.6 * std::f64::consts::PI).sin() * gamma_14);

    let sqrt_pi = std::f64::consts::PI.sqrt();
    let points = [
        (0.0, 1.0, 1e-14),
        (0.25, 0.9064024770554771, 1e-11),
        (-0.25, 1.2254167024651776, 1e-11),
        (0.4, gamma_14, 1e-8),
        (-0.4, gamma_06, 1e-8),
        (0.5, sqrt_pi / 2.0, 2e-6),
        (-0.5, sqrt_pi, 2e-6),
    ];
    Ok(points
        .iter()
        .map(|&(z, reference, tolerance)| {
            let computed = eval(z);
            GammaSample {
                z,
                reference,
                computed,
                error: (computed - reference).abs(),
                tolerance,
            }
        })
        .collect())
}

/// The factorial-expansion tail `sum_k B_{2k}/((2k)(2k-1)) x^{2k-1}` has odd
/// powers only, so `exp(S(x)) exp(S(-x)) = 1`; verified exactly through the
/// given order. Returns the coefficient series of `exp(S(x))`.
pub fn odd_series_product_check(order: u32) -> Result<Series<Rat>, SeriesError> {
    let bern = bernoulli_upto(order + 1);
    let mut coeffs = vec![rat_int(0); order as usize + 1];
    let mut k = 1u32;
    while 2 * k - 1 <= order {
        let two_k = 2 * k as usize;
        coeffs[two_k - 1] = &bern[two_k] / rat_int((two_k * (two_k - 1)) as i64);
        k += 1;
    }
    let s = Series::new(coeffs);
    let forward = s.exp_recurrence()?;
    let backward = s.neg().exp_recurrence()?;
    let product = forward.mul(&backward);
    for m in 0..=order as usize {
        let expected = if m == 0 { rat_int(1) } else { rat_int(0) };
        assert_eq!(product.coeff(m), expected, "order {m} of the alternating product");
    }
    Ok(forward)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotics::stirling_gamma::{stirling_gamma_upto, GammaRoute};

    #[test]
    fn zeta_against_closed_forms() {
        let pi = std::f64::consts::PI;
        assert!((zeta_int_f64(2) - pi * pi / 6.0).abs() < 1e-14);
        assert!((zeta_int_f64(4) - pi.powi(4) / 90.0).abs() < 1e-14);
        assert!((zeta_int_f64(6) - pi.powi(6) / 945.0).abs() < 1e-13);
        assert!((zeta_int_f64(3) - 1.2020569031595943).abs() < 1e-13);
        let tail = zeta_int_f64(30) - 1.0 - 2.0f64.powi(-30);
        assert!(tail.abs() < 1e-13, "zeta(30) tail {tail}");
    }

    #[test]
    fn leading_coefficients() {
        let g = gamma_taylor_coeffs(6).unwrap();
        assert!((g[0] - 1.0).abs() < 1e-15);
        assert!((g[1] - EULER_GAMMA).abs() < 1e-14);
        // g_2 = (gamma^2 + zeta(2))/2
        let expected = (EULER_GAMMA * EULER_GAMMA + zeta_int_f64(2)) / 2.0;
        assert!((g[2] - expected).abs() < 1e-14);
        // the coefficients drift toward 1, reflecting the pole at distance 1
        let g20 = gamma_taylor_coeffs(20).unwrap();
        assert!((g20[20] - 1.0).abs() < 0.01, "g_20 = {}", g20[20]);
    }

    #[test]
    fn check_points_meet_graded_tolerances() {
        let samples = gamma_taylor_check(20).unwrap();
        assert_eq!(samples.len(), 7);
        for s in &samples {
            assert!(
                s.passes(),
                "z = {}: error {} over tolerance {}",
                s.z,
                s.error,
                s.tolerance
            );
        }
        // the half-radius points really are remainder-limited: much better
        // than 2e-6 would mean the graded tolerances are mislabeled
        let half = samples.iter().find(|s| s.z == -0.5).unwrap();
        assert!(half.error > 1e-9, "unexpectedly small remainder {}", half.error);
    }

    #[test]
    fn truncation_error_shrinks_with_order() {
        let reference = std::f64::consts::PI.sqrt();
        let mut previous = f64::INFINITY;
        for order in [8u32, 12, 16, 20] {
            let err = (gamma_taylor_eval(-0.5, order).unwrap() - reference).abs();
            assert!(err < previous, "order {order}: {err} vs {previous}");
            previous = err;
        }
    }

    #[test]
    fn quadrature_reference_is_sound() {
        // Gamma(1.4) ~ 0.88726 and Gamma(1.5) = sqrt(pi)/2 exactly.
        let g14 = gamma_quadrature_reference(0.4);
        assert!((g14 - 0.88726).abs() < 1e-4, "{g14}");
        let g15 = gamma_quadrature_reference(0.5);
        assert!((g15 - std::f64::consts::PI.sqrt() / 2.0).abs() < 1e-11, "{g15}");
        let g20 = gamma_quadrature_reference(1.0);
        assert!((g20 - 1.0).abs() < 1e-11, "Gamma(2) = {g20}");
    }

    #[test]
    fn alternating_product_and_factorial_coefficients() {
        let series = odd_series_product_check(10).unwrap();
        let gammas = stirling_gamma_upto(10, GammaRoute::Bernoulli).unwrap();
        for (m, g) in gammas.iter().enumerate() {
            assert_eq!(&series.coeff(m), g, "coefficient {m}");
        }
    }
}

//! The log-log expansion coefficients `l_n(u)` and the derived correction
//! terms `a_r(u)`.
//!
//! Expanding the doubly logarithmic composite around `x = 0`,
//!
//! ```text
//! log(1 + log(1 + x)/u) = sum_{n>=1} l_n(u) x^n,
//! ```
//!
//! each `l_n` is a polynomial of degree `n` in `1/u` with no constant term.
//! Two routes compute it:
//!
//! * a closed form over the Stirling cycle numbers,
//!   `l_n(u) = (-1)^{n+1} sum_{k=1}^{n} ((k-1)!/n!) [n k] u^{-k}`;
//! * composing the two logarithm series directly, which lands on
//!   `sum_k ((-1)^{k+1}/(k u^k)) A_{n,k}(1, -1/2, 1/3, ...)`.
//!
//! The corrections to the saddle-point expansion of `int_1^inf (log z)^n
//! e^{-alpha z} dz` are then finite De Moivre sums in the `l_j(u)`:
//!
//! ```text
//! a_r(u) = sum_{j=0}^{2r} ((2r+2j-1)!!/j!) (u^2/(u+1))^{j+r}
//!          A_{2r,j}(l_3(u), l_4(u), ...)
//! ```
//!
//! evaluated exactly for rational `u > 0` and in floating point for the
//! Lambert-W values the validation harness feeds in.

use thiserror::Error;

use crate::algebra::laurent::LaurentInU;
use crate::algebra::scalar::{factorial, Rat};
use crate::algebra::{AlgebraError, Ring};
use crate::demoivre::{demoivre_eval_recursive, DemoivreError};
use crate::sequences::stirling::cycle_triangle;

#[derive(Debug, Error, PartialEq)]
pub enum EllError {
    #[error("the expansion variable must be positive, got {0}")]
    NonPositiveArgument(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Demoivre(#[from] DemoivreError),
}

/// `l_n(u)` by the Stirling-cycle closed form; `n >= 1`.
pub fn ell_poly(n: u32) -> LaurentInU {
    ell_polys_upto(n).pop().expect("n >= 1 yields at least one entry")
}

/// `l_1(u) .. l_{n_max}(u)` sharing one cycle-number triangle.
pub fn ell_polys_upto(n_max: u32) -> Vec<LaurentInU> {
    assert!(n_max >= 1, "the expansion starts at n = 1");
    let cycles = cycle_triangle(n_max as usize);
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max as usize {
        let n_fact = Rat::from_integer(factorial(n as u32));
        let mut p = LaurentInU::new();
        for k in 1..=n {
            let c = Rat::from_integer(factorial(k as u32 - 1) * &cycles[n][k]) / &n_fact;
            let signed = if n % 2 == 1 { c } else { -c };
            p.add_term(signed, k as u32);
        }
        out.push(p);
    }
    out
}

/// `l_n(u)` by composing the logarithm series: the coefficient sum
/// `sum_{k=1}^{n} ((-1)^{k+1}/(k u^k)) A_{n,k}(1, -1/2, 1/3, ...)`.
pub fn ell_poly_series_route(n: u32) -> Result<LaurentInU, EllError> {
    assert!(n >= 1, "the expansion starts at n = 1");
    let log_args: Vec<Rat> = (1..=n as i64)
        .map(|j| {
            let sign = if j % 2 == 1 { 1 } else { -1 };
            Rat::new(sign.into(), j.into())
        })
        .collect();
    let mut p = LaurentInU::new();
    for k in 1..=n {
        let a = demoivre_eval_recursive::<Rat>(n, k, &log_args)?;
        let weight = Rat::new(if k % 2 == 1 { 1.into() } else { (-1).into() }, (k as i64).into());
        p.add_term(weight * a, k);
    }
    Ok(p)
}

/// Evaluates a Laurent polynomial at `v` in an arbitrary ring.
fn laurent_eval_in<R: Ring>(p: &LaurentInU, v: &R) -> Result<R, AlgebraError> {
    let vi = v.invert()?;
    let mut acc = R::zero();
    for (k, c) in p.terms() {
        acc = acc.add(&R::from_rat(c)?.mul(&vi.pow(k)));
    }
    Ok(acc)
}

fn a_r_in<R: Ring>(r: u32, v: &R) -> Result<R, EllError> {
    let order = 2 * r as usize;
    // A_{2r,j} consumes arguments l_3 .. l_{2r+2}.
    let ells = ell_polys_upto(2 * r + 2);
    let mut args = Vec::with_capacity(order);
    for ell in &ells[2..] {
        args.push(laurent_eval_in(ell, v)?);
    }
    let ratio = v.mul(v).divide_exact(&v.add(&R::one()))?;
    let mut acc = R::zero();
    for j in 0..=order {
        let a = demoivre_eval_recursive::<R>(order as u32, j as u32, &args)?;
        if a.is_zero() {
            continue;
        }
        let mut weight = R::one();
        for i in 0..(r + j as u32) {
            weight = weight.mul(&R::from_int(2 * i as i64 + 1));
        }
        let weight = weight.divide_exact(&R::from_bigint(&factorial(j as u32)))?;
        acc = acc.add(&weight.mul(&ratio.pow(j as u32 + r)).mul(&a));
    }
    Ok(acc)
}

/// `a_r(u)` for exact rational `u > 0`.
pub fn a_r_exact(r: u32, u: &Rat) -> Result<Rat, EllError> {
    if u <= &Rat::zero() {
        return Err(EllError::NonPositiveArgument(u.to_string()));
    }
    a_r_in(r, u)
}

/// `a_r(u)` in floating point, for irrational `u` such as Lambert-W values.
pub fn a_r_f64(r: u32, u: f64) -> Result<f64, EllError> {
    if !(u > 0.0) {
        return Err(EllError::NonPositiveArgument(u.to_string()));
    }
    a_r_in(r, &u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, rat_int};

    #[test]
    fn first_polynomials_by_hand() {
        // l_1 = 1/u, l_2 = -1/(2u) - 1/(2u^2),
        // l_3 = 1/(3u) + 1/(2u^2) + 1/(3u^3).
        assert_eq!(ell_poly(1), LaurentInU::u_inv());
        let mut l2 = LaurentInU::term(rat(-1, 2), 1);
        l2.add_term(rat(-1, 2), 2);
        assert_eq!(ell_poly(2), l2);
        let mut l3 = LaurentInU::term(rat(1, 3), 1);
        l3.add_term(rat(1, 2), 2);
        l3.add_term(rat(1, 3), 3);
        assert_eq!(ell_poly(3), l3);
    }

    #[test]
    fn values_at_one() {
        assert_eq!(ell_poly(3).eval(&rat_int(1)).unwrap(), rat(7, 6));
        assert_eq!(ell_poly(4).eval(&rat_int(1)).unwrap(), rat(-35, 24));
    }

    #[test]
    fn degree_and_missing_constant_term() {
        for n in 1..=12u32 {
            let p = ell_poly(n);
            assert_eq!(p.degree_in_u_inv(), Some(n), "degree of l_{n}");
            assert!(Ring::is_zero(&p.coeff(0)), "constant term of l_{n}");
            assert!(!Ring::is_zero(&p.coeff(1)), "1/u term of l_{n}");
        }
    }

    #[test]
    fn series_route_matches_cycle_closed_form() {
        for n in 1..=12u32 {
            assert_eq!(ell_poly_series_route(n).unwrap(), ell_poly(n), "n = {n}");
        }
    }

    #[test]
    fn composite_series_recovers_coefficients() {
        // Numerical cross-check of the generating identity at concrete points:
        // log(1 + log(1 + x)/u) against the truncated coefficient sum.
        for &(u, x) in &[(2.0f64, 0.05f64), (1.5, -0.04), (4.0, 0.1)] {
            let lhs = (1.0 + (1.0 + x).ln() / u).ln();
            let mut rhs = 0.0;
            for n in 1..=20u32 {
                rhs += ell_poly(n).eval_f64(u) * x.powi(n as i32);
            }
            assert!((lhs - rhs).abs() < 1e-13, "u = {u}, x = {x}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn first_correction_at_one() {
        assert_eq!(a_r_exact(1, &rat_int(1)).unwrap(), rat(35, 192));
        assert_eq!(a_r_exact(0, &rat_int(1)).unwrap(), rat_int(1));
    }

    #[test]
    fn float_route_matches_exact_route() {
        for r in 0..=3u32 {
            for &(n, d) in &[(1i64, 1i64), (3, 2), (5, 1), (9, 4)] {
                let exact = a_r_exact(r, &rat(n, d)).unwrap();
                let float = a_r_f64(r, n as f64 / d as f64).unwrap();
                let reference = crate::algebra::scalar::rat_to_f64(&exact);
                let scale = reference.abs().max(1.0);
                assert!(
                    (float - reference).abs() < 1e-9 * scale,
                    "r = {r}, u = {n}/{d}: {float} vs {reference}"
                );
            }
        }
    }

    #[test]
    fn corrections_stay_moderate_at_saddle_points() {
        // u = W(n) grows like log n; the r-th correction should stay well
        // within a (log n)^r envelope over the validation range.
        for &n in &[50.0f64, 200.0, 800.0] {
            let u = crate::asymptotics::lambert::lambert_w(n).unwrap();
            for r in 1..=3u32 {
                let a = a_r_f64(r, u).unwrap();
                let envelope = 5.0 * n.ln().powi(r as i32);
                assert!(a.abs() < envelope, "n = {n}, r = {r}: {a} vs {envelope}");
            }
        }
    }

    #[test]
    fn nonpositive_arguments_rejected() {
        assert!(matches!(a_r_exact(1, &rat_int(0)), Err(EllError::NonPositiveArgument(_))));
        assert!(matches!(a_r_exact(1, &rat_int(-2)), Err(EllError::NonPositiveArgument(_))));
        assert!(matches!(a_r_f64(1, -0.5), Err(EllError::NonPositiveArgument(_))));
        assert!(matches!(a_r_f64(1, f64::NAN), Err(EllError::NonPositiveArgument(_))));
    }
}

//! The Stirling-series coefficients `gamma_m`, by three routes.
//!
//! The factorial expansion
//!
//! ```text
//! n! = sqrt(2 pi n) (n/e)^n (1 + gamma_1/n + gamma_2/n^2 + ...)
//! ```
//!
//! has exactly computable rational coefficients `gamma_0 = 1`,
//! `gamma_1 = 1/12`, `gamma_2 = 1/288`, ... Three independent derivations are
//! implemented and must agree:
//!
//! * `Perron`: the saddle-point machinery of [`laplace`](super::laplace)
//!   applied to the Gamma integral, where `f(z) - f(0) = log(1+z) - z` gives
//!   `a_m = (-1)^m / (m+2)` and `g = 1`; then
//!   `gamma_m = (2m-1)!! * Psi_{2m} * a0^{(2m+1)/2}`.
//! * `Bernoulli`: exponentiating the log-factorial tail
//!   `sum_k B_{2k} / (2k(2k-1)) x^{2k-1}` via De Moivre polynomials.
//! * `Zeta`: the same exponentiation with the tail coefficients produced as
//!   `zeta(-i)/(-i)` through `zeta(-n) = -B_{n+1}/(n+1)`.
//!
//! [`stirling_gamma_direct_sum`] is the fully simplified double-factorial
//! form of the Perron route, kept separate so the simplification itself is
//! testable.

use crate::algebra::scalar::{factorial, rat, rat_int, Rat};
use crate::algebra::Ring;
use crate::demoivre::{demoivre_table, DemoivreError};
use crate::sequences::bernoulli::bernoulli_upto;

use super::laplace::{laplace_psi, LaplaceError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaRoute {
    Perron,
    Bernoulli,
    Zeta,
}

impl GammaRoute {
    pub fn all() -> [GammaRoute; 3] {
        [GammaRoute::Perron, GammaRoute::Bernoulli, GammaRoute::Zeta]
    }

    pub fn label(self) -> &'static str {
        match self {
            GammaRoute::Perron => "perron",
            GammaRoute::Bernoulli => "bernoulli",
            GammaRoute::Zeta => "zeta",
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum GammaError {
    #[error(transparent)]
    Laplace(#[from] LaplaceError),
    #[error(transparent)]
    Demoivre(#[from] DemoivreError),
}

/// `gamma_m` by the chosen route, exactly.
pub fn stirling_gamma(m: u32, route: GammaRoute) -> Result<Rat, GammaError> {
    match route {
        GammaRoute::Perron => perron_route(m),
        GammaRoute::Bernoulli => exponentiated_tail(m, &bernoulli_tail(m)),
        GammaRoute::Zeta => exponentiated_tail(m, &zeta_tail(m)),
    }
}

/// All of `gamma_0 .. gamma_max` by the chosen route.
pub fn stirling_gamma_upto(m_max: u32, route: GammaRoute) -> Result<Vec<Rat>, GammaError> {
    (0..=m_max).map(|m| stirling_gamma(m, route)).collect()
}

fn perron_route(m: u32) -> Result<Rat, GammaError> {
    // a_i = (-1)^i / (i+2) from -(log(1+z) - z), g = 1. Psi_{2m} is
    // coeff * a0^{-(2m+1)/2}; with a0 = 1/2 the prefactor is 2^m sqrt(2),
    // which cancels against Gamma(m + 1/2)/sqrt(2 pi) down to (2m-1)!!.
    let order = 2 * m as usize;
    let a: Vec<Rat> = (0..=order)
        .map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            rat(sign, i as i64 + 2)
        })
        .collect();
    let mut b = vec![rat_int(0); order + 1];
    b[0] = rat_int(1);
    let psi = laplace_psi(2 * m, &a, &b)?;
    let mut acc = psi.coeff;
    for i in 0..m {
        acc *= rat_int(2 * i as i64 + 1);
    }
    Ok(acc)
}

/// The double-factorial sum
/// `gamma_m = sum_{j=0}^{2m} (2m+2j-1)!! / ((-1)^j j!) * A_{2m,j}(1/3, 1/4, ...)`,
/// the closed form the Perron route reduces to.
pub fn stirling_gamma_direct_sum(m: u32) -> Result<Rat, GammaError> {
    let order = 2 * m as usize;
    let args: Vec<Rat> = (0..order).map(|i| rat(1, i as i64 + 3)).collect();
    let table = demoivre_table::<Rat>(order, order, &args)?;
    let mut acc = Rat::zero();
    for (j, row) in table.iter().enumerate() {
        let value = &row[order];
        if Ring::is_zero(value) {
            continue;
        }
        // (2m + 2j - 1)!! = product of odd numbers up to 2(m+j) - 1
        let mut weight = Rat::one();
        for i in 0..(m + j as u32) {
            weight *= rat_int(2 * i as i64 + 1);
        }
        weight /= Rat::from_integer(factorial(j as u32));
        if j % 2 == 1 {
            weight = -weight;
        }
        acc += weight * value;
    }
    Ok(acc)
}

/// Odd-power tail coefficients `t_1, t_2, ...` of the log-factorial series,
/// `t_{2k-1} = B_{2k}/(2k(2k-1))` and zero at even indices, from the
/// Bernoulli recurrence.
fn bernoulli_tail(m: u32) -> Vec<Rat> {
    let bern = bernoulli_upto(2 * m + 2);
    (1..=m as usize)
        .map(|i| {
            if i % 2 == 1 {
                let two_k = i as i64 + 1;
                &bern[i + 1] / rat_int(two_k * (two_k - 1))
            } else {
                rat_int(0)
            }
        })
        .collect()
}

/// The same tail with each entry produced as `zeta(-i)/(-i)`, using
/// `zeta(-n) = -B_{n+1}/(n+1)`.
fn zeta_tail(m: u32) -> Vec<Rat> {
    let bern = bernoulli_upto(2 * m + 2);
    (1..=m as usize)
        .map(|i| {
            let zeta_at_minus_i = -&bern[i + 1] / rat_int(i as i64 + 1);
            zeta_at_minus_i / rat_int(-(i as i64))
        })
        .collect()
}

///`gamma_m = sum_j (1/j!) A_{m,j}(t_1, t_2, ...)` for a tail `t`.
fn exponentiated_tail(m: u32, tail: &[Rat]) -> Result<Rat, GammaError> {
    let table = demoivre_table::<Rat>(m as usize, m as usize, tail)?;
    let mut acc = Rat::zero();
    for (j, row) in table.iter().enumerate() {
        let value = &row[m as usize];
        if Ring::is_zero(value) {
            continue;
        }
        acc += value / Rat::from_integer(factorial(j as u32));
    }
    Ok(acc)
}

//! Exact coefficients for Laplace-type integrals.
//!
//! For `I(n) = int g(z) exp(n f(z)) dz` with a quadratic maximum of `f` at
//! `z = 0`, write `f(z) - f(0) = -(a0 z^2 + a1 z^3 + a2 z^4 + ...)` and
//! `g(z) = b0 + b1 z + b2 z^2 + ...`. Then
//!
//! ```text
//! I(n) = e^{n f(0)} ( sum_{r<R} Gamma(r + 1/2) Psi_{2r} / n^{r+1/2} + O(n^{-R-1/2}) )
//! ```
//!
//! and each `Psi_s` is an explicit finite sum over De Moivre polynomials in
//! the ratios `a_i / a0`:
//!
//! ```text
//! Psi_s = a0^{-(s+1)/2} sum_{m=0}^{s} b_{s-m}
//!         sum_{k=0}^{m} C(-(s+1)/2, k) A_{m,k}(a1/a0, a2/a0, ...)
//! ```
//!
//! The sum is rational whenever the inputs are, but the prefactor carries a
//! half-integer power of `a0`, so the value is kept as the exact pair
//! (rational factor, power of `a0` in halves) and only converted to `f64` on
//! request.

use std::fmt;

use thiserror::Error;

use crate::algebra::scalar::{binomial_rat, rat, rat_to_f64, Rat};
use crate::algebra::Ring;
use crate::demoivre::{demoivre_table, DemoivreError};

#[derive(Debug, Error, PartialEq)]
pub enum LaplaceError {
    #[error("the quadratic coefficient a0 must be nonzero")]
    ZeroQuadraticTerm,
    #[error("order {order} needs coefficients a0..a{order} and b0..b{order}, got {got_a} and {got_b}")]
    InsufficientCoefficients { order: u32, got_a: usize, got_b: usize },
    #[error(transparent)]
    Demoivre(#[from] DemoivreError),
}

/// The exact value `coeff * a0^(half_exponent / 2)`.
///
/// `Psi_s` is of this shape with `half_exponent = -(s + 1)`; keeping the
/// power separate avoids introducing square roots into the rational part.
#[derive(Debug, Clone, PartialEq)]
pub struct PsiValue {
    pub coeff: Rat,
    pub a0: Rat,
    pub half_exponent: i64,
}

impl PsiValue {
    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.coeff) * rat_to_f64(&self.a0).powf(self.half_exponent as f64 / 2.0)
    }
}

impl fmt::Display for PsiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) * ({})^({}/2)", self.coeff, self.a0, self.half_exponent)
    }
}

/// `Psi_s` from the expansions `f(z) - f(0) = -(a[0] z^2 + a[1] z^3 + ...)`
/// and `g(z) = b[0] + b[1] z + ...`, exactly.
///
/// Requires `a[0] != 0` (a genuine quadratic maximum) and at least `s + 1`
/// coefficients in each slice.
pub fn laplace_psi(s: u32, a: &[Rat], b: &[Rat]) -> Result<PsiValue, LaplaceError> {
    let needed = s as usize + 1;
    if a.len() < needed || b.len() < needed {
        return Err(LaplaceError::InsufficientCoefficients {
            order: s,
            got_a: a.len(),
            got_b: b.len(),
        });
    }
    if Ring::is_zero(&a[0]) {
        return Err(LaplaceError::ZeroQuadraticTerm);
    }

    let ratios: Vec<Rat> = a[1..needed].iter().map(|ai| ai / &a[0]).collect();
    let table = demoivre_table::<Rat>(s as usize, s as usize, &ratios)?;
    let exponent = rat(-(s as i64 + 1), 2);

    let mut coeff = Rat::zero();
    for m in 0..=s as usize {
        if Ring::is_zero(&b[s as usize - m]) {
            continue;
        }
        let mut inner = Rat::zero();
        for (k, row) in table.iter().enumerate().take(m + 1) {
            let value = &row[m];
            if Ring::is_zero(value) {
                continue;
            }
            inner += binomial_rat(&exponent, k as u32) * value;
        }
        coeff += &b[s as usize - m] * inner;
    }

    Ok(PsiValue {
        coeff,
        a0: a[0].clone(),
        half_exponent: -(s as i64 + 1),
    })
}

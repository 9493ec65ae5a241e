//! Truncated formal power series over a ring.
//!
//! A [`Series`] stores coefficients for `x^0..=x^N` and never pretends to
//! know more: arithmetic truncates to the smaller operand order, and equality
//! compares coefficients up to the smaller order only. The compositional
//! operations all run through De Moivre polynomials, using the expansion
//!
//! ```text
//! [x^n] g(f(x)) = sum_k b_k * A_{n,k}(a_1, a_2, ...)
//! ```
//!
//! for `g = sum b_k x^k` and `f = a_1 x + a_2 x^2 + ...`, together with its
//! specializations to powers, binomial powers, exp, and log. Compositional
//! inverses are computed two independent ways (triangular recursion and
//! Lagrange inversion) so they can check each other.

use std::fmt;

use thiserror::Error;

use crate::algebra::ring::{AlgebraError, Ring};
use crate::algebra::scalar::{binomial_general, binomial_i64, factorial, Int};
use crate::demoivre::{demoivre_eval_recursive, demoivre_table, DemoivreError};

#[derive(Debug, Error)]
pub enum SeriesError {
    #[error("series must have zero constant term, found {0}")]
    ConstantTermNotZero(String),
    #[error("linear coefficient {0} is not invertible")]
    LinearNotInvertible(String),
    #[error("inversion parameter t = {0} is not invertible")]
    ParameterNotInvertible(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Demoivre(#[from] DemoivreError),
}

/// A power series known through order `N = coeffs.len() - 1`.
#[derive(Clone, Debug)]
pub struct Series<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    /// Wraps explicit coefficients `c_0..c_N`; the list must be non-empty.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![R::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Series::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut coeffs = vec![R::zero(); order + 1];
        coeffs[0] = c;
        Series { coeffs }
    }

    /// The series `x` (zero when `order = 0`).
    pub fn x(order: usize) -> Self {
        let mut coeffs = vec![R::zero(); order + 1];
        if order >= 1 {
            coeffs[1] = R::one();
        }
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^n`; asking beyond the truncation order is a bug in
    /// the caller, not a zero.
    pub fn coeff(&self, n: usize) -> R {
        assert!(
            n <= self.order(),
            "coefficient {} requested from a series of order {}",
            n,
            self.order()
        );
        self.coeffs[n].clone()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a series by truncation");
        Series { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Series {
            coeffs: (0..=n).map(|i| self.coeffs[i].add(&rhs.coeffs[i])).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Series {
            coeffs: (0..=n).map(|i| self.coeffs[i].sub(&rhs.coeffs[i])).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Series { coeffs: self.coeffs.iter().map(Ring::neg).collect() }
    }

    pub fn scale(&self, c: &R) -> Self {
        Series { coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect() }
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![R::zero(); n + 1];
        for i in 0..=n {
            if Ring::is_zero(&self.coeffs[i]) {
                continue;
            }
            for j in 0..=(n - i) {
                if !Ring::is_zero(&rhs.coeffs[j]) {
                    coeffs[i + j] = coeffs[i + j].add(&self.coeffs[i].mul(&rhs.coeffs[j]));
                }
            }
        }
        Series { coeffs }
    }

    fn require_zero_constant(&self) -> Result<(), SeriesError> {
        if Ring::is_zero(&self.coeffs[0]) {
            Ok(())
        } else {
            Err(SeriesError::ConstantTermNotZero(self.coeffs[0].to_string()))
        }
    }

    /// Table of `A_{n,k}` over this series' coefficients `a_i = [x^i] self`,
    /// for `n, k <= self.order()`.
    fn demoivre_rows(&self) -> Result<Vec<Vec<R>>, SeriesError> {
        let n = self.order();
        Ok(demoivre_table(n, n, &self.coeffs[1..])?)
    }

    /// `self^m` for any integer `m`, via
    /// `[x^n] f^m = sum_k C(m,k) a_0^{m-k} A_{n,k}(a_1, a_2, ...)`;
    /// negative `m` needs an invertible constant term.
    pub fn power_int(&self, m: i64) -> Result<Self, SeriesError> {
        let n_ord = self.order();
        let a0 = &self.coeffs[0];
        let table = self.demoivre_rows()?;
        let mut coeffs = Vec::with_capacity(n_ord + 1);
        for n in 0..=n_ord {
            let mut acc = R::zero();
            for k in 0..=n {
                if m >= 0 && (k as i64) > m {
                    break;
                }
                let a_nk = &table[k][n];
                if Ring::is_zero(a_nk) {
                    continue;
                }
                let c = binomial_i64(m, k as u32);
                if c == Int::from(0) {
                    continue;
                }
                let scaled = a0.pow_i64(m - k as i64)?.mul(&R::from_bigint(&c));
                acc = acc.add(&scaled.mul(a_nk));
            }
            coeffs.push(acc);
        }
        Ok(Series { coeffs })
    }

    /// Multiplicative inverse by the triangular recurrence
    /// `b_n = -a_0^{-1} sum_{j>=1} a_j b_{n-j}`, independent of
    /// [`Series::power_int`] with `m = -1`.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let inv0 = self.coeffs[0].invert()?;
        let n_ord = self.order();
        let mut b = vec![R::zero(); n_ord + 1];
        b[0] = inv0.clone();
        for n in 1..=n_ord {
            let mut acc = R::zero();
            for j in 1..=n {
                if !Ring::is_zero(&self.coeffs[j]) {
                    acc = acc.add(&self.coeffs[j].mul(&b[n - j]));
                }
            }
            b[n] = acc.mul(&inv0).neg();
        }
        Ok(Series { coeffs: b })
    }

    /// `g(f(x))` where `self = g` and `f` has zero constant term; the result
    /// carries the smaller of the two orders. Powers of `f` are built
    /// incrementally, which is the same sum as
    /// `[x^n] g(f) = sum_k b_k A_{n,k}(a)` without expanding any `A`.
    pub fn compose(&self, f: &Self) -> Result<Self, SeriesError> {
        f.require_zero_constant()?;
        let n = self.order().min(f.order());
        let f = f.truncated(n);
        let mut acc = Series::constant(self.coeffs[0].clone(), n);
        let mut power = Series::one(n);
        for k in 1..=n {
            power = power.mul(&f);
            if !Ring::is_zero(&self.coeffs[k]) {
                acc = acc.add(&power.scale(&self.coeffs[k]));
            }
        }
        Ok(acc)
    }

    /// `(1 + f)^alpha` for `f = self` with zero constant term:
    /// `[x^n] = sum_k C(alpha,k) A_{n,k}(a)`; `alpha` may live in a
    /// polynomial ring, making the coefficients symbolic.
    pub fn power_binomial(&self, alpha: &R) -> Result<Self, SeriesError> {
        self.require_zero_constant()?;
        let n_ord = self.order();
        let table = self.demoivre_rows()?;
        let binoms: Result<Vec<R>, AlgebraError> =
            (0..=n_ord as u32).map(|k| binomial_general(alpha, k)).collect();
        let binoms = binoms?;
        let mut coeffs = Vec::with_capacity(n_ord + 1);
        for n in 0..=n_ord {
            let mut acc = R::zero();
            for k in 0..=n {
                if !Ring::is_zero(&table[k][n]) {
                    acc = acc.add(&binoms[k].mul(&table[k][n]));
                }
            }
            coeffs.push(acc);
        }
        Ok(Series { coeffs })
    }

    /// `e^{alpha f}` for `f = self` with zero constant term:
    /// `[x^n] = sum_k (alpha^k / k!) A_{n,k}(a)`.
    pub fn exp_series(&self, alpha: &R) -> Result<Self, SeriesError> {
        self.require_zero_constant()?;
        let n_ord = self.order();
        let table = self.demoivre_rows()?;
        let mut coeffs = Vec::with_capacity(n_ord + 1);
        for n in 0..=n_ord {
            let mut acc = R::zero();
            for k in 0..=n {
                if !Ring::is_zero(&table[k][n]) {
                    let w = Ring::pow(alpha, k as u32)
                        .divide_exact(&R::from_bigint(&factorial(k as u32)))?;
                    acc = acc.add(&w.mul(&table[k][n]));
                }
            }
            coeffs.push(acc);
        }
        Ok(Series { coeffs })
    }

    /// `e^f` for `f = self` with zero constant term, by the derivative
    /// recurrence `m c_m = sum_{j=1}^m j a_j c_{m-j}`. Same function as
    /// [`Series::exp_series`] with `alpha = 1` through an unrelated
    /// algorithm, and much faster at high order; the two must agree exactly.
    pub fn exp_recurrence(&self) -> Result<Self, SeriesError> {
        self.require_zero_constant()?;
        let n_ord = self.order();
        let mut c = vec![R::zero(); n_ord + 1];
        c[0] = R::one();
        for m in 1..=n_ord {
            let mut acc = R::zero();
            for j in 1..=m {
                if !Ring::is_zero(&self.coeffs[j]) {
                    let weighted = self.coeffs[j].mul(&R::from_int(j as i64));
                    acc = acc.add(&weighted.mul(&c[m - j]));
                }
            }
            c[m] = acc.divide_exact(&R::from_int(m as i64))?;
        }
        Ok(Series { coeffs: c })
    }

    /// `log(1 + alpha f)` for `f = self` with zero constant term:
    /// `[x^n] = sum_{k>=1} (-1)^{k-1} (alpha^k / k) A_{n,k}(a)`.
    pub fn log_series(&self, alpha: &R) -> Result<Self, SeriesError> {
        self.require_zero_constant()?;
        let n_ord = self.order();
        let table = self.demoivre_rows()?;
        let mut coeffs = vec![R::zero(); n_ord + 1];
        for n in 1..=n_ord {
            let mut acc = R::zero();
            for k in 1..=n {
                if !Ring::is_zero(&table[k][n]) {
                    let mut w = Ring::pow(alpha, k as u32).divide_exact(&R::from_int(k as i64))?;
                    if k % 2 == 0 {
                        w = w.neg();
                    }
                    acc = acc.add(&w.mul(&table[k][n]));
                }
            }
            coeffs[n] = acc;
        }
        Ok(Series { coeffs })
    }

    /// `(g(f(x)))^r` for `self = g`, computed through
    /// `[x^n] (g compose f)^r = A_{n+r,r}(c_0, c_1, ...)
    ///                        = sum_k A_{n,k}(a) A_{k+r,r}(b_0, b_1, ...)`
    /// rather than by composing and then powering, so the two routes can be
    /// compared.
    pub fn compose_power(&self, f: &Self, r: u32) -> Result<Self, SeriesError> {
        f.require_zero_constant()?;
        let n_ord = self.order().min(f.order());
        let f = f.truncated(n_ord);
        let table_a = f.demoivre_rows()?;
        // A_{k+r,r}(b_0, b_1, ...): argument i of the inner polynomial is
        // b_{i-1}, so the coefficient slice of g serves directly.
        let b_args = &self.coeffs[..=n_ord];
        let mut inner = Vec::with_capacity(n_ord + 1);
        for k in 0..=n_ord as u32 {
            inner.push(demoivre_eval_recursive(k + r, r, b_args)?);
        }
        let mut coeffs = Vec::with_capacity(n_ord + 1);
        for n in 0..=n_ord {
            let mut acc = R::zero();
            for k in 0..=n {
                if !Ring::is_zero(&table_a[k][n]) {
                    acc = acc.add(&table_a[k][n].mul(&inner[k]));
                }
            }
            coeffs.push(acc);
        }
        Ok(Series { coeffs })
    }

    /// Compositional inverse by the triangular relations
    /// `0 = sum_{k=1}^{m-1} b_k A_{m,k}(a) + b_m a_1^m`, solving for `b_m`
    /// one order at a time.
    pub fn inverse_recursive(&self) -> Result<Self, SeriesError> {
        self.require_zero_constant()?;
        let n_ord = self.order();
        if n_ord == 0 || Ring::is_zero(&self.coeffs[1]) {
            let shown = if n_ord == 0 { R::zero() } else { self.coeffs[1].clone() };
            return Err(SeriesError::LinearNotInvertible(shown.to_string()));
        }
        let a1_inv = self
            .coeffs[1]
            .invert()
            .map_err(|_| SeriesError::LinearNotInvertible(self.coeffs[1].to_string()))?;
        let table = self.demoivre_rows()?;
        let mut b = vec![R::zero(); n_ord + 1];
        b[1] = a1_inv.clone();
        for m in 2..=n_ord {
            let mut acc = R::zero();
            for k in 1..m {
                if !Ring::is_zero(&table[k][m]) {
                    acc = acc.add(&b[k].mul(&table[k][m]));
                }
            }
            b[m] = acc.mul(&Ring::pow(&a1_inv, m as u32)).neg();
        }
        Ok(Series { coeffs: b })
    }

    /// Compositional inverse by Lagrange inversion,
    /// `b_m = (1/m) sum_{k=0}^{m-1} C(-m,k) a_1^{-m-k} A_{m-1,k}(a_2, a_3, ...)`,
    /// with the `1/m` applied as an exact division so integer rings stay
    /// integer rings.
    pub fn inverse_lagrange(&self) -> Result<Self, SeriesError> {
        self.require_zero_constant()?;
        let n_ord = self.order();
        if n_ord == 0 || Ring::is_zero(&self.coeffs[1]) {
            let shown = if n_ord == 0 { R::zero() } else { self.coeffs[1].clone() };
            return Err(SeriesError::LinearNotInvertible(shown.to_string()));
        }
        let a1 = &self.coeffs[1];
        a1.invert().map_err(|_| SeriesError::LinearNotInvertible(a1.to_string()))?;
        // A_{m-1,k} over the shifted arguments a_2, a_3, ...
        let shifted = demoivre_table(n_ord - 1, n_ord - 1, &self.coeffs[2..])?;
        let mut b = vec![R::zero(); n_ord + 1];
        for m in 1..=n_ord {
            let mut acc = R::zero();
            for k in 0..m {
                if !Ring::is_zero(&shifted[k][m - 1]) {
                    let c = binomial_i64(-(m as i64), k as u32);
                    let w = a1.pow_i64(-(m as i64) - k as i64)?.mul(&R::from_bigint(&c));
                    acc = acc.add(&w.mul(&shifted[k][m - 1]));
                }
            }
            b[m] = acc.divide_exact(&R::from_int(m as i64))?;
        }
        Ok(Series { coeffs: b })
    }

    /// Renders `{order, ring, coeffs}` with coefficients as display strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "order": self.order(),
            "ring": ring_tag(R::NAME),
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

fn ring_tag(name: &str) -> &'static str {
    match name {
        "Q" => "rational",
        "Z" => "integer",
        "R64" => "float",
        _ => "poly",
    }
}

/// Equality compares coefficients up to the smaller of the two orders; the
/// orders themselves are not compared.
impl<R: Ring> PartialEq for Series<R> {
    fn eq(&self, other: &Self) -> bool {
        let n = self.order().min(other.order());
        self.coeffs[..=n] == other.coeffs[..=n]
    }
}

impl<R: Ring> fmt::Display for Series<R> {
    /// Ascending terms `c0 + c1*x + c2*x^2 + ...`, skipping zero
    /// coefficients; multi-token coefficients are parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if Ring::is_zero(c) {
                continue;
            }
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains(' ') => ("-", rest.to_string()),
                _ if cs.contains(' ') => ("+", format!("({})", cs)),
                _ => ("+", cs),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            match i {
                0 => write!(f, "{}", mag)?,
                1 if mag == "1" => write!(f, "x")?,
                1 => write!(f, "{}*x", mag)?,
                _ if mag == "1" => write!(f, "x^{}", i)?,
                _ => write!(f, "{}*x^{}", mag, i)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `A_{n+r,r}(c_0, c_1, ...)` for `c = ` coefficients of `g(f(x))`, computed
/// from the two factor sequences as `sum_k A_{n,k}(a) A_{k+r,r}(b)` without
/// forming the composition; `a` holds `a_1, a_2, ...` and `b` holds
/// `b_0, b_1, ...`.
pub fn demoivre_compose<R: Ring>(n: u32, r: u32, a: &[R], b: &[R]) -> Result<R, SeriesError> {
    let mut acc = R::zero();
    for k in 0..=n {
        let outer = demoivre_eval_recursive(n, k, a)?;
        if Ring::is_zero(&outer) {
            continue;
        }
        let inner = demoivre_eval_recursive(k + r, r, b)?;
        acc = acc.add(&outer.mul(&inner));
    }
    Ok(acc)
}

/// `A_{m,r}` over the coefficients of the compositional inverse of `f`,
/// computed directly from `f` by
/// `A_{m,r}(b) = (r/m) sum_{k=0}^{m-r} C(-m,k) a_1^{-m-k} A_{m-r,k}(a_2, ...)`
/// without constructing the inverse series.
pub fn demoivre_of_inverse<R: Ring>(m: u32, r: u32, f: &Series<R>) -> Result<R, SeriesError> {
    assert!(r >= 1 && r <= m, "need 1 <= r <= m, got r = {}, m = {}", r, m);
    f.require_zero_constant()?;
    let a1 = f.coeff(1);
    a1.invert().map_err(|_| SeriesError::LinearNotInvertible(a1.to_string()))?;
    let mut acc = R::zero();
    for k in 0..=(m - r) {
        let inner = demoivre_eval_recursive(m - r, k, &f.coeffs()[2..])?;
        if Ring::is_zero(&inner) {
            continue;
        }
        let c = binomial_i64(-(m as i64), k);
        let w = a1.pow_i64(-(m as i64) - k as i64)?.mul(&R::from_bigint(&c));
        acc = acc.add(&w.mul(&inner));
    }
    acc = acc.mul(&R::from_int(r as i64));
    Ok(acc.divide_exact(&R::from_int(m as i64))?)
}

/// Forward transform `b_n(t) = sum_{k=1}^n (t^k / k!) A_{n,k}(a)`, the
/// coefficients of `exp(t(a_1 x + a_2 x^2 + ...))`.
pub fn moyal_forward<R: Ring>(a: &[R], t: &R) -> Result<Vec<R>, SeriesError> {
    let n_max = a.len();
    let table = demoivre_table(n_max, n_max, a)?;
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut acc = R::zero();
        for k in 1..=n {
            if !Ring::is_zero(&table[k][n]) {
                let w = Ring::pow(t, k as u32).divide_exact(&R::from_bigint(&factorial(k as u32)))?;
                acc = acc.add(&w.mul(&table[k][n]));
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// Inverse transform `a_n = (1/t) sum_{k=1}^n ((-1)^{k+1} / k) A_{n,k}(b)`,
/// undoing [`moyal_forward`]; requires invertible `t`.
pub fn moyal_invert<R: Ring>(b: &[R], t: &R) -> Result<Vec<R>, SeriesError> {
    let t_inv = t
        .invert()
        .map_err(|_| SeriesError::ParameterNotInvertible(t.to_string()))?;
    let n_max = b.len();
    let table = demoivre_table(n_max, n_max, b)?;
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut acc = R::zero();
        for k in 1..=n {
            if !Ring::is_zero(&table[k][n]) {
                let mut w = table[k][n].divide_exact(&R::from_int(k as i64))?;
                if k % 2 == 0 {
                    w = w.neg();
                }
                acc = acc.add(&w);
            }
        }
        out.push(acc.mul(&t_inv));
    }
    Ok(out)
}
